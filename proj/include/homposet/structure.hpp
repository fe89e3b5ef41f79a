#pragma once

#include <optional>
#include <vector>

#include "homposet/morphism.hpp"

namespace homposet {

/// Two-sided units U(R).
MultiplicativeSet units(const RingPtr& ring);

/// Elements that are neither left nor right zero-divisors. On a finite
/// carrier this coincides with units(ring).
MultiplicativeSet regular_elements(const RingPtr& ring);

/// J(R) = { x : 1 + r x s is a unit for all r, s }.
Ideal jacobson_radical(const RingPtr& ring);

/// Least two-sided ideal containing `generators`.
Ideal ideal_generated_by(const RingPtr& ring, const std::vector<Elem>& generators);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// All two-sided ideals, {0} and R included, sorted by size and then by
/// member list. Built from principal ideals closed under pairwise sums.
std::vector<Ideal> enumerate_ideals(const RingPtr& ring);

/// Prime ideals of a commutative ring: proper, and ab in P forces a or b in P.
/// Throws NotCommutative.
std::vector<Ideal> prime_ideals(const RingPtr& ring);

/// Proper ideal whose complement is multiplicatively closed.
bool is_completely_prime(const Ideal& ideal);

bool is_saturated(const RingPtr& ring, const ElementSet& members);

/// xy = 1 implies yx = 1, checked over all pairs.
bool is_directly_finite(const RingPtr& ring);

/// Commutative and every non-zero element invertible.
bool is_field(const FiniteRing& ring);

struct DenominatorReport {
    bool is_left_ore = false;
    bool is_left_reversible = false;
    bool is_left_denominator = false;
    /// { r : t r = 0 for some t in T }
    ElementSet ass;
    bool ass_is_ideal = false;
    /// R/ass(T) with its canonical map, present for left denominator sets
    /// with proper ass(T).
    std::optional<Quotient> fraction_ring;
};

/// Left Ore and left reversibility of T, ass(T), and the ring of left
/// fractions. On a finite ring the fraction ring is R/ass(T): the images of
/// T are regular there, hence already invertible.
DenominatorReport denominator_analysis(const RingPtr& ring, const ElementSet& t);

}  // namespace homposet
