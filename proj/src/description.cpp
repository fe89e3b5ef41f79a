#include "homposet/description.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "homposet/morphism.hpp"
#include "homposet/structure.hpp"

namespace homposet {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::uint32_t parse_count(const std::string& s, const char* what) {
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw Error(ErrorCode::ParseError, std::string("expected ") + what + ", got '" + s + "'");
    }
    return static_cast<std::uint32_t>(std::stoul(s));
}

class Parser {
public:
    Parser(std::string_view text, const Limits& limits) : limits_(limits) {
        std::string token;
        std::stringstream in{std::string(text)};
        while (std::getline(in, token, ':')) tokens_.push_back(trim(token));
        if (!text.empty() && text.back() == ':') tokens_.push_back("");
    }

    RingPtr parse_all() {
        auto ring = parse_ring();
        if (pos_ != tokens_.size()) throw Error(ErrorCode::ParseError, "trailing input after '" + tokens_[pos_ - 1] + "'");
        return ring;
    }

private:
    const std::string& next(const char* what) {
        if (pos_ >= tokens_.size()) throw Error(ErrorCode::ParseError, std::string("unexpected end, expected ") + what);
        return tokens_[pos_++];
    }

    RingPtr parse_ring() {
        const std::string head = next("a constructor");
        if (head == "zmod") {
            const auto n = parse_count(next("modulus"), "a modulus");
            if (n < 2) throw Error(ErrorCode::ParseError, "zmod needs a modulus of at least 2 (the zero ring is excluded)");
            return make_zmod(n, limits_);
        }
        if (head == "gf") {
            const auto p = parse_count(next("characteristic"), "a prime");
            const auto k = parse_count(next("degree"), "a degree");
            if (!is_prime(p)) throw Error(ErrorCode::ParseError, std::to_string(p) + " is not prime");
            if (k < 1) throw Error(ErrorCode::ParseError, "field degree must be at least 1");
            return make_finite_field(p, k, limits_);
        }
        if (head == "product") {
            auto left = parse_ring();
            auto right = parse_ring();
            return make_product(left, right, limits_);
        }
        if (head == "matrix") {
            const auto k = parse_count(next("dimension"), "a dimension");
            if (k < 1) throw Error(ErrorCode::ParseError, "matrix dimension must be at least 1");
            auto base = parse_ring();
            return make_matrix_ring(base, k, limits_);
        }
        if (head == "quot") {
            auto base = parse_ring();
            const std::string gens = next("gens=...");
            if (gens.rfind("gens=", 0) != 0) throw Error(ErrorCode::ParseError, "expected gens=..., got '" + gens + "'");
            std::vector<Elem> generators;
            std::stringstream in(gens.substr(5));
            std::string item;
            while (std::getline(in, item, ',')) {
                const auto g = parse_count(trim(item), "an element index");
                if (g >= base->size()) {
                    throw Error(ErrorCode::ParseError, "generator " + std::to_string(g) + " outside the carrier");
                }
                generators.push_back(g);
            }
            return make_quotient(base, ideal_generated_by(base, generators)).ring;
        }
        throw Error(ErrorCode::ParseError, "unknown constructor '" + head + "'");
    }

    Limits limits_;
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
};

// Greedy generating set: ascending members, each kept if not yet generated.
std::vector<Elem> greedy_generators(const RingPtr& base, const ElementSet& ideal) {
    std::vector<Elem> gens;
    ElementSet generated = ideal_generated_by(base, gens).members;
    for (Elem x : ideal.members()) {
        if (generated == ideal) break;
        if (generated.contains(x)) continue;
        gens.push_back(x);
        generated = ideal_generated_by(base, gens).members;
    }
    return gens;
}

}  // namespace

RingPtr parse_description(std::string_view text, const Limits& limits) {
    try {
        return Parser(text, limits).parse_all();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::CapExceeded) throw;
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string describe(const FiniteRing& ring) {
    struct Visitor {
        std::string operator()(const provenance::ZMod& z) const { return "zmod:" + std::to_string(z.n); }
        std::string operator()(const provenance::Field& f) const {
            return "gf:" + std::to_string(f.p) + ":" + std::to_string(f.k);
        }
        std::string operator()(const provenance::Product& p) const {
            return "product:" + describe(*p.left) + ":" + describe(*p.right);
        }
        std::string operator()(const provenance::Matrix& m) const {
            return "matrix:" + std::to_string(m.k) + ":" + describe(*m.base);
        }
        std::string operator()(const provenance::Quotient& q) const {
            std::string out = "quot:" + describe(*q.base) + ":gens=";
            const auto gens = greedy_generators(q.base, q.ideal);
            for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + std::to_string(gens[i]);
            if (gens.empty()) out += "0";
            return out;
        }
        std::string operator()(const provenance::RawTable& r) const { return "raw:" + r.label; }
    };
    return std::visit(Visitor{}, ring.provenance());
}

std::string FiniteRing::describe() const { return homposet::describe(*this); }

}  // namespace homposet
