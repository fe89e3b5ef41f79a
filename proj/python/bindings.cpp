#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homposet/description.hpp"
#include "homposet/epimorphism.hpp"
#include "homposet/hom_z.hpp"
#include "homposet/oracle.hpp"
#include "homposet/render.hpp"
#include "homposet/search.hpp"
#include "homposet/structure.hpp"

namespace py = pybind11;
using namespace homposet;

namespace {

struct PyRing {
    RingPtr ring;
};

struct PyPair {
    RingPtr ring;
    std::vector<Elem> ideal;
    std::vector<Elem> mset;
};

PyPair to_py(const HomPair& p) { return PyPair{p.ring(), p.ideal.members.members(), p.mset.members.members()}; }

HomPair from_py(const PyPair& p) {
    return HomPair{Ideal{p.ring, ElementSet(p.ring->size(), std::span<const Elem>(p.ideal))},
                   MultiplicativeSet{p.ring, ElementSet(p.ring->size(), std::span<const Elem>(p.mset))}};
}

std::vector<PyPair> pairs_of(const HomPoset& poset) {
    std::vector<PyPair> out;
    for (const auto& p : poset.pairs()) out.push_back(to_py(p));
    return out;
}

std::string join_text(const zhom::Element& x, const zhom::Element& y) {
    const auto j = zhom::z_join(x, y);
    return std::holds_alternative<Top>(j) ? "TOP" : std::get<zhom::Element>(j).to_string();
}

}  // namespace

PYBIND11_MODULE(_homposet, m) {
    m.doc() = "Hom(R) posets of finite rings and of Z";

    static py::exception<Error> error(m, "HomposetError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    py::class_<PyRing>(m, "Ring")
        .def_static("parse", [](const std::string& text) { return PyRing{parse_description(text)}; }, py::arg("text"))
        .def_static("zmod", [](std::uint32_t n) { return PyRing{make_zmod(n)}; })
        .def_static("field", [](std::uint32_t p, std::uint32_t k) { return PyRing{make_finite_field(p, k)}; })
        .def_static("product", [](const PyRing& a, const PyRing& b) { return PyRing{make_product(a.ring, b.ring)}; })
        .def_static("matrix", [](const PyRing& base, std::uint32_t k) { return PyRing{make_matrix_ring(base.ring, k)}; })
        .def_property_readonly("size", [](const PyRing& r) { return r.ring->size(); })
        .def_property_readonly("is_commutative", [](const PyRing& r) { return r.ring->is_commutative(); })
        .def("describe", [](const PyRing& r) { return r.ring->describe(); })
        .def("add", [](const PyRing& r, Elem a, Elem b) { return r.ring->add(a, b); })
        .def("mul", [](const PyRing& r, Elem a, Elem b) { return r.ring->mul(a, b); })
        .def("units", [](const PyRing& r) { return units(r.ring).members.members(); })
        .def("jacobson_radical", [](const PyRing& r) { return jacobson_radical(r.ring).members.members(); })
        .def("ideals", [](const PyRing& r) {
            std::vector<std::vector<Elem>> out;
            for (const auto& i : enumerate_ideals(r.ring)) out.push_back(i.members.members());
            return out;
        })
        .def("__repr__", [](const PyRing& r) { return "Ring('" + r.ring->describe() + "')"; });

    py::class_<PyPair>(m, "HomPair")
        .def_readonly("ideal", &PyPair::ideal)
        .def_readonly("mset", &PyPair::mset)
        .def("__le__", [](const PyPair& a, const PyPair& b) { return leq(from_py(a), from_py(b)); })
        .def("__eq__", [](const PyPair& a, const PyPair& b) { return from_py(a) == from_py(b); })
        .def("meet", [](const PyPair& a, const PyPair& b) { return to_py(meet(from_py(a), from_py(b))); })
        .def("__repr__", [](const PyPair& p) { return "HomPair(ideal=" + py::repr(py::cast(p.ideal)).cast<std::string>() +
                                                        ", mset=" + py::repr(py::cast(p.mset)).cast<std::string>() + ")"; });

    m.def("hom", [](const PyRing& r) { return pairs_of(hom_poset(r.ring)); }, py::arg("ring"),
          "Elements of Hom(R) in canonical order.");
    m.def("max_elements", [](const PyRing& r) {
        std::vector<PyPair> out;
        for (const auto& p : max_elements(hom_poset(r.ring))) out.push_back(to_py(p));
        return out;
    });
    m.def("hasse", [](const PyRing& r, bool bar) { return hasse(hom_poset(r.ring, bar)); }, py::arg("ring"),
          py::arg("bar") = false);
    m.def("render", [](const PyRing& r, const std::string& format, bool bar) {
        const auto poset = hom_poset(r.ring, bar);
        if (format == "dot") return render_dot(poset);
        if (format == "json") return render_json(poset);
        if (format == "text") return render_text(poset);
        throw Error(ErrorCode::InvalidArgument, "format must be text, dot or json");
    }, py::arg("ring"), py::arg("format") = "text", py::arg("bar") = false);
    m.def("morphisms", [](const PyRing& a, const PyRing& b) {
        std::vector<std::vector<Elem>> out;
        for (const auto& f : enumerate_morphisms(a.ring, b.ring)) out.push_back(f.images());
        return out;
    }, "Image arrays of all unital morphisms.");
    m.def("is_epimorphism", [](const PyRing& a, const PyRing& b, std::vector<Elem> images) {
        return is_ring_epimorphism(RingMorphism::checked(a.ring, b.ring, std::move(images)));
    });
    m.def("pair_of", [](const PyRing& a, const PyRing& b, std::vector<Elem> images) {
        return to_py(pair_of_morphism(RingMorphism::checked(a.ring, b.ring, std::move(images))));
    });

    m.def("z_leq", [](const std::string& x, const std::string& y) {
        return zhom::z_leq(zhom::Element::parse(x), zhom::Element::parse(y));
    });
    m.def("z_meet", [](const std::string& x, const std::string& y) {
        return zhom::z_meet(zhom::Element::parse(x), zhom::Element::parse(y)).to_string();
    });
    m.def("z_join", [](const std::string& x, const std::string& y) {
        return join_text(zhom::Element::parse(x), zhom::Element::parse(y));
    });
    m.def("z_rho", [](const std::string& x) { return zhom::rho(zhom::Element::parse(x)).to_string(); });

    m.def("claim_ids", &oracle::claim_ids);
    m.def("run_oracle", [](std::size_t bound, std::vector<std::string> only) {
        oracle::Options options;
        options.only = std::move(only);
        options.limits.table_cap = std::max(options.limits.table_cap, bound);
        const auto catalog = oracle::Catalog::generate(bound, options.limits);
        py::gil_scoped_release release;
        return oracle::verify_theorems(catalog, options).to_json();
    }, py::arg("bound") = 16, py::arg("only") = std::vector<std::string>{}, "Runs the theorem battery; returns JSON text.");
}
