#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "homposet/hom_poset.hpp"

namespace homposet::zhom {

/// A finite or cofinite set of primes. In cofinite mode `members` lists the
/// primes that are left out.
class PrimeSet {
public:
    enum class Mode { Finite, Cofinite };

    static PrimeSet finite(std::vector<std::uint64_t> primes);
    /// All primes except `excluded`.
    static PrimeSet cofinite(std::vector<std::uint64_t> excluded);
    static PrimeSet empty() { return finite({}); }
    static PrimeSet all() { return cofinite({}); }
    /// Primes dividing n.
    static PrimeSet divisors_of(std::uint64_t n);

    Mode mode() const noexcept { return mode_; }
    const std::vector<std::uint64_t>& members() const noexcept { return members_; }
    bool contains(std::uint64_t p) const;
    bool is_subset_of(const PrimeSet& other) const;

    PrimeSet unite(const PrimeSet& other) const;
    PrimeSet intersect(const PrimeSet& other) const;

    friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

private:
    PrimeSet(Mode mode, std::vector<std::uint64_t> members);

    Mode mode_ = Mode::Finite;
    std::vector<std::uint64_t> members_;
};

/// Element of Hom(Z): either (0, M_P) or (nZ, M_div(n)) with n >= 2.
class Element {
public:
    static Element zero_kernel(PrimeSet primes);
    static Element modular(std::uint64_t n);

    bool is_modular() const noexcept { return std::holds_alternative<std::uint64_t>(value_); }
    std::uint64_t modulus() const { return std::get<std::uint64_t>(value_); }
    const PrimeSet& primes() const { return std::get<PrimeSet>(value_); }
    /// P for zero-kernel elements, div(n) for modular ones.
    PrimeSet excluded_primes() const;

    /// Text form: "n:12", "0:P=2,3" or "0:coP=5,7".
    std::string to_string() const;
    static Element parse(const std::string& text);

    friend bool operator==(const Element&, const Element&) = default;

private:
    explicit Element(std::variant<PrimeSet, std::uint64_t> v) : value_(std::move(v)) {}
    std::variant<PrimeSet, std::uint64_t> value_;
};

Element z_modular(std::uint64_t n);
Element z_zero_kernel(PrimeSet primes);

bool z_leq(const Element& x, const Element& y);
Element z_meet(const Element& x, const Element& y);

/// Least upper bound in Hom-bar(Z); Top when no pair lies above both.
std::variant<Element, Top> z_join(const Element& x, const Element& y);

/// Value in N_0 extended by +infinity.
struct Extended {
    static constexpr std::uint64_t infinity = ~std::uint64_t{0};
    std::uint64_t value = 0;

    bool is_infinite() const noexcept { return value == infinity; }
    friend auto operator<=>(const Extended&, const Extended&) = default;
};

/// Function on primes and the extra slot 0, with finite support over a
/// default value for unlisted primes.
struct RhoVector {
    std::map<std::uint64_t, Extended> support;
    Extended fallback;
    std::uint64_t slot0 = 0;

    Extended at(std::uint64_t p) const;
    /// Pointwise comparison over all primes and slot 0.
    bool pointwise_leq(const RhoVector& other) const;
    std::string to_string() const;

    friend bool operator==(const RhoVector&, const RhoVector&) = default;
};

/// The order-reversing embedding: exponents of n for modular elements;
/// +infinity on P and 1 in slot 0 for zero-kernel elements.
RhoVector rho(const Element& x);

/// The pair of the unique morphism Z -> S: (nZ, M_div(n)) with n the
/// characteristic of S. Throws Internal when the unit preimage disagrees.
Element pair_of_integer_morphism(const IntegerMorphism& f);

std::vector<std::uint64_t> factor(std::uint64_t n);

}  // namespace homposet::zhom
