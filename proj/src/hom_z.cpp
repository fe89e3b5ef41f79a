#include "homposet/hom_z.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "homposet/finite_ring.hpp"
#include "homposet/structure.hpp"

namespace homposet::zhom {

namespace {

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<std::uint64_t> set_union(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::uint64_t> set_intersection(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::uint64_t> set_difference(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool includes(const std::vector<std::uint64_t>& big, const std::vector<std::uint64_t>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::uint64_t parse_number(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw Error(ErrorCode::ParseError, "expected a non-negative integer, got '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw Error(ErrorCode::ParseError, "integer out of range: '" + s + "'");
    }
}

std::vector<std::uint64_t> parse_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    if (s.empty()) return out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_number(item));
    return out;
}

std::string join_list(const std::vector<std::uint64_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    return out.str();
}

}  // namespace

std::vector<std::uint64_t> factor(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

PrimeSet::PrimeSet(Mode mode, std::vector<std::uint64_t> members) : mode_(mode), members_(sorted_unique(std::move(members))) {
    for (auto p : members_) {
        if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    }
}

PrimeSet PrimeSet::finite(std::vector<std::uint64_t> primes) { return PrimeSet(Mode::Finite, std::move(primes)); }

PrimeSet PrimeSet::cofinite(std::vector<std::uint64_t> excluded) { return PrimeSet(Mode::Cofinite, std::move(excluded)); }

PrimeSet PrimeSet::divisors_of(std::uint64_t n) { return finite(factor(n)); }

bool PrimeSet::contains(std::uint64_t p) const {
    const bool listed = std::binary_search(members_.begin(), members_.end(), p);
    return is_prime(p) && (mode_ == Mode::Finite ? listed : !listed);
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const {
    if (mode_ == Mode::Finite) {
        if (other.mode_ == Mode::Finite) return includes(other.members_, members_);
        return set_intersection(members_, other.members_).empty();
    }
    if (other.mode_ == Mode::Finite) return false;
    return includes(members_, other.members_);
}

PrimeSet PrimeSet::unite(const PrimeSet& other) const {
    if (mode_ == Mode::Finite && other.mode_ == Mode::Finite) return finite(set_union(members_, other.members_));
    if (mode_ == Mode::Finite) return cofinite(set_difference(other.members_, members_));
    if (other.mode_ == Mode::Finite) return cofinite(set_difference(members_, other.members_));
    return cofinite(set_intersection(members_, other.members_));
}

PrimeSet PrimeSet::intersect(const PrimeSet& other) const {
    if (mode_ == Mode::Finite && other.mode_ == Mode::Finite) return finite(set_intersection(members_, other.members_));
    if (mode_ == Mode::Finite) return finite(set_difference(members_, other.members_));
    if (other.mode_ == Mode::Finite) return finite(set_difference(other.members_, members_));
    return cofinite(set_union(members_, other.members_));
}

Element Element::zero_kernel(PrimeSet primes) { return Element(std::move(primes)); }

Element Element::modular(std::uint64_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "modular elements need n >= 2");
    return Element(n);
}

PrimeSet Element::excluded_primes() const {
    return is_modular() ? PrimeSet::divisors_of(modulus()) : primes();
}

std::string Element::to_string() const {
    if (is_modular()) return "n:" + std::to_string(modulus());
    const auto& p = primes();
    return std::string(p.mode() == PrimeSet::Mode::Finite ? "0:P=" : "0:coP=") + join_list(p.members());
}

Element Element::parse(const std::string& text) {
    try {
        if (text.rfind("n:", 0) == 0) {
            const auto n = parse_number(text.substr(2));
            if (n < 2) throw Error(ErrorCode::ParseError, "modular element needs n >= 2");
            return modular(n);
        }
        if (text.rfind("0:P=", 0) == 0) return zero_kernel(PrimeSet::finite(parse_list(text.substr(4))));
        if (text.rfind("0:coP=", 0) == 0) return zero_kernel(PrimeSet::cofinite(parse_list(text.substr(6))));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        throw Error(ErrorCode::ParseError, e.what());
    }
    throw Error(ErrorCode::ParseError, "unrecognized element '" + text + "' (expected n:N, 0:P=... or 0:coP=...)");
}

Element z_modular(std::uint64_t n) { return Element::modular(n); }

Element z_zero_kernel(PrimeSet primes) { return Element::zero_kernel(std::move(primes)); }

bool z_leq(const Element& x, const Element& y) {
    if (!x.is_modular() && !y.is_modular()) return y.primes().is_subset_of(x.primes());
    if (x.is_modular() && y.is_modular()) return x.modulus() % y.modulus() == 0;
    if (!x.is_modular()) return PrimeSet::divisors_of(y.modulus()).is_subset_of(x.primes());
    return false;
}

Element z_meet(const Element& x, const Element& y) {
    if (x.is_modular() && y.is_modular()) return z_modular(std::lcm(x.modulus(), y.modulus()));
    return z_zero_kernel(x.excluded_primes().unite(y.excluded_primes()));
}

std::variant<Element, Top> z_join(const Element& x, const Element& y) {
    if (x.is_modular() && y.is_modular()) {
        const auto g = std::gcd(x.modulus(), y.modulus());
        if (g < 2) return Top{};
        return z_modular(g);
    }
    if (!x.is_modular() && !y.is_modular()) return z_zero_kernel(x.primes().intersect(y.primes()));
    const Element& zero = x.is_modular() ? y : x;
    const Element& mod = x.is_modular() ? x : y;
    std::uint64_t k = 1;
    for (auto p : factor(mod.modulus())) {
        if (zero.primes().contains(p)) k *= p;
    }
    if (k < 2) return Top{};
    return z_modular(k);
}

Extended RhoVector::at(std::uint64_t p) const {
    auto it = support.find(p);
    return it == support.end() ? fallback : it->second;
}

bool RhoVector::pointwise_leq(const RhoVector& other) const {
    if (slot0 > other.slot0) return false;
    // Infinitely many primes take the fallback values on both sides.
    if (fallback > other.fallback) return false;
    for (const auto& [p, v] : support) {
        if (v > other.at(p)) return false;
    }
    for (const auto& [p, v] : other.support) {
        if (at(p) > v) return false;
    }
    return true;
}

std::string RhoVector::to_string() const {
    auto show = [](Extended e) { return e.is_infinite() ? std::string("inf") : std::to_string(e.value); };
    std::ostringstream out;
    out << "{";
    for (const auto& [p, v] : support) out << p << ":" << show(v) << ", ";
    out << "0slot:" << slot0;
    if (fallback.value != 0) out << ", default:" << show(fallback);
    out << "}";
    return out.str();
}

RhoVector rho(const Element& x) {
    RhoVector v;
    if (x.is_modular()) {
        for (auto p : factor(x.modulus())) v.support[p].value += 1;
        v.slot0 = 0;
        return v;
    }
    v.slot0 = 1;
    const auto& primes = x.primes();
    if (primes.mode() == PrimeSet::Mode::Finite) {
        for (auto p : primes.members()) v.support[p] = Extended{Extended::infinity};
    } else {
        v.fallback = Extended{Extended::infinity};
        for (auto p : primes.members()) v.support[p] = Extended{0};
    }
    return v;
}

Element pair_of_integer_morphism(const IntegerMorphism& f) {
    const auto n = f.kernel_modulus();
    const auto u = units(f.target).members;
    for (std::uint64_t r = 0; r < n; ++r) {
        const bool unit_image = u.contains(f(static_cast<std::int64_t>(r)));
        if (unit_image != (std::gcd(r, n) == 1)) {
            throw Error(ErrorCode::Internal, "unit preimage of Z -> S is not M_div(n)");
        }
    }
    return z_modular(n);
}

}  // namespace homposet::zhom
