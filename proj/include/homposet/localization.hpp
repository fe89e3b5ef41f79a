#pragma once

#include <cstdint>
#include <variant>

#include "homposet/hom_poset.hpp"
#include "homposet/hom_z.hpp"

namespace homposet {

// The universal ring inverting M/a over R/a is not built from a free
// presentation here. On a finite carrier every element of M/a is regular in
// R/a and therefore already a unit, so R/a with the projection has the
// universal property; the oracle re-checks universality by exhaustive
// factorization.

/// Reduced fraction with positive denominator.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Fraction make(std::int64_t num, std::int64_t den);
    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// { a/b in Q : no prime of P divides b }, the localization of Z at M_P.
struct RationalSubring {
    zhom::PrimeSet primes;

    bool contains(const Fraction& x) const;
    /// z is invertible in the subring.
    bool is_unit_image(std::int64_t z) const;
    /// The pair of Z -> subring, (0, M_P).
    zhom::Element pair() const { return zhom::z_zero_kernel(primes); }
};

struct FiniteLocalization {
    RingPtr ring;
    RingMorphism canonical;
};

using LocalizedRing = std::variant<FiniteLocalization, RationalSubring>;

/// R/a with psi = projection. Verifies ker psi = a and psi^-1(U) = M.
/// Throws InvalidPair.
FiniteLocalization universal_inverting_finite(const RingPtr& ring, const HomPair& pair);

/// The unique g with g after psi = f. Throws NoFactorization when
/// ker f does not contain a or f^-1(U(S)) does not contain M, where (a, M) is
/// the pair of psi. Uniqueness is confirmed by exhaustive search.
RingMorphism factor_through(const RingMorphism& psi, const RingMorphism& f, const Limits& limits = {});

RationalSubring localize_integers(zhom::PrimeSet primes);

/// f = epsilon . g . chi . pi with the intermediate rings R/a, the universal
/// ring (here R/a again), and T.
struct Factorization {
    RingMorphism pi;       // R -> R/a
    RingMorphism chi;      // R/a -> universal ring
    RingMorphism g;        // universal ring -> T
    RingMorphism epsilon;  // T -> S
    bool g_surjective = false;
    bool g_epimorphism = false;
    bool epsilon_injective = false;
    bool composite_matches = false;

    bool valid() const { return g_surjective && g_epimorphism && epsilon_injective && composite_matches; }
};

/// Subring of S generated by f(R) and the inverses of f(M), with its
/// inclusion into S.
struct GeneratedSubring {
    RingPtr ring;
    RingMorphism inclusion;
};

GeneratedSubring generated_subring(const RingMorphism& f);

Factorization canonical_factorization(const RingMorphism& f);

struct Corestriction {
    RingPtr subring;
    RingMorphism corestricted;
    bool is_epi = false;
    bool pair_preserved = false;
};

Corestriction epimorphic_corestriction(const RingMorphism& f);

}  // namespace homposet
