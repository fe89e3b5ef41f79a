#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homposet/description.hpp"
#include "homposet/hom_z.hpp"
#include "homposet/oracle.hpp"
#include "homposet/render.hpp"

namespace {

using namespace homposet;

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_parse = 2;
constexpr int exit_caps = 3;
constexpr int exit_degenerate = 4;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::InvalidArgument: return exit_parse;
        case ErrorCode::CapExceeded: return exit_caps;
        case ErrorCode::ZeroRingExcluded: return exit_degenerate;
        default: return exit_internal;
    }
}

// HOMPOSET_TABLE_CAP / HOMPOSET_SEARCH_CAP override the default caps.
void apply_env_caps(Limits& limits) {
    auto read = [](const char* name, std::size_t& slot) {
        if (const char* v = std::getenv(name)) {
            try {
                slot = std::stoul(v);
            } catch (const std::exception&) {
                throw Error(ErrorCode::ParseError, std::string(name) + " is not a number");
            }
        }
    };
    read("HOMPOSET_TABLE_CAP", limits.table_cap);
    read("HOMPOSET_SEARCH_CAP", limits.search_cap);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hom(R) posets of finite rings and of Z"};
    app.require_subcommand(1);

    Limits limits;
    std::size_t table_cap = 0;
    std::size_t search_cap = 0;
    app.add_option("--table-cap", table_cap, "largest ring order stored as tables");
    app.add_option("--search-cap", search_cap, "largest ring order for morphism search");

    auto* hom = app.add_subcommand("hom", "print Hom(R) for a ring description");
    std::string ring_text;
    bool bar = false;
    std::string format = "text";
    hom->add_option("ring", ring_text, "ring description, e.g. product:zmod:2:zmod:3")->required();
    hom->add_flag("--bar", bar, "adjoin the top element");
    hom->add_option("--format", format, "text, dot or json")->check(CLI::IsMember({"text", "dot", "json"}));

    auto* desc = app.add_subcommand("describe", "print the canonical form and order of a ring description");
    std::string desc_text;
    desc->add_option("ring", desc_text, "ring description")->required();

    auto* oracle = app.add_subcommand("oracle", "run the brute-force theorem battery");
    std::size_t bound = 16;
    std::vector<std::string> only;
    std::string oracle_format = "text";
    bool inject = false;
    bool list = false;
    oracle->add_option("--bound", bound, "largest catalog ring order");
    oracle->add_option("--only", only, "claim ids to run")->delimiter(',');
    oracle->add_option("--format", oracle_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    oracle->add_flag("--inject-corrupt-pair", inject, "add a pair with 0 in M to the pair checks");
    oracle->add_flag("--list", list, "list claim ids and exit");

    auto* zhom = app.add_subcommand("zhom", "queries on Hom(Z); elements are n:N, 0:P=p,q or 0:coP=p,q");
    zhom->require_subcommand(1);
    std::string zx, zy;
    auto* zleq = zhom->add_subcommand("leq", "x <= y");
    auto* zmeet = zhom->add_subcommand("meet", "greatest lower bound");
    auto* zjoin = zhom->add_subcommand("join", "least upper bound in Hom-bar(Z)");
    auto* zrho = zhom->add_subcommand("rho", "order-reversing embedding");
    for (auto* sub : {zleq, zmeet, zjoin}) {
        sub->add_option("x", zx)->required();
        sub->add_option("y", zy)->required();
    }
    zrho->add_option("x", zx)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_parse;
    }

    try {
        apply_env_caps(limits);
        if (table_cap != 0) limits.table_cap = table_cap;
        if (search_cap != 0) limits.search_cap = search_cap;

        if (*hom) {
            const auto ring = parse_description(ring_text, limits);
            const auto poset = hom_poset(ring, bar);
            if (format == "dot") std::cout << render_dot(poset);
            else if (format == "json") std::cout << render_json(poset);
            else std::cout << render_text(poset);
            return exit_ok;
        }
        if (*desc) {
            const auto ring = parse_description(desc_text, limits);
            std::cout << ring->describe() << "\n" << "order " << ring->size() << ", "
                      << (ring->is_commutative() ? "commutative" : "noncommutative") << "\n";
            return exit_ok;
        }
        if (*oracle) {
            if (list) {
                for (const auto& id : oracle::claim_ids()) std::cout << id << "\n";
                return exit_ok;
            }
            oracle::Options options;
            options.only = only;
            options.inject_corrupt_pair = inject;
            options.limits.search_cap = std::max(options.limits.search_cap, limits.search_cap);
            options.limits.table_cap = std::max({options.limits.table_cap, limits.table_cap, bound});
            const auto catalog = oracle::Catalog::generate(bound, options.limits);
            const auto report = oracle::verify_theorems(catalog, options);
            std::cout << (oracle_format == "json" ? report.to_json() : report.to_text());
            if (report.degenerate) return exit_degenerate;
            return report.all_passed() ? exit_ok : exit_internal;
        }
        if (*zhom) {
            const auto x = zhom::Element::parse(zx);
            if (*zrho) {
                std::cout << zhom::rho(x).to_string() << "\n";
                return exit_ok;
            }
            const auto y = zhom::Element::parse(zy);
            if (*zleq) {
                std::cout << (zhom::z_leq(x, y) ? "true" : "false") << "\n";
            } else if (*zmeet) {
                std::cout << zhom::z_meet(x, y).to_string() << "\n";
            } else {
                const auto j = zhom::z_join(x, y);
                if (std::holds_alternative<Top>(j)) std::cout << "TOP\n";
                else std::cout << std::get<zhom::Element>(j).to_string() << "\n";
            }
            return exit_ok;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}
