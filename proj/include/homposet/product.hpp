#pragma once

#include <vector>

#include "homposet/morphism.hpp"

namespace homposet {

/// Projection of a product ring onto factor 0 (left) or 1 (right).
RingMorphism product_projection(const RingPtr& product, int side);

/// Non-unital inclusion of a factor into a product, r -> (r, 0) or (0, r),
/// as an element map.
std::vector<Elem> product_injection(const RingPtr& product, int side);

/// The corner ring eSe of an idempotent e, with identity e. Its elements are
/// listed in `embedding` (ascending S-indices). May be the zero ring when
/// e = 0.
struct CornerRing {
    RingPtr ring;
    std::vector<Elem> embedding;

    /// Index inside the corner of an element of S lying in eSe.
    Elem index_of(Elem s) const;
};

CornerRing corner_ring(const RingPtr& ring, Elem idempotent);

/// A morphism out of R1 x R2 as the triple (e, psi1, psi2), e = f(1, 0)
/// idempotent, psi1: R1 -> eSe, psi2: R2 -> (1-e)S(1-e).
struct ProductTriple {
    RingPtr source;
    RingPtr target;
    Elem idempotent;
    CornerRing left_corner;
    CornerRing right_corner;
    RingMorphism left;
    RingMorphism right;
};

/// Throws NotAProduct when the source has no product provenance.
ProductTriple decompose_product_morphism(const RingMorphism& f);

/// f(r1, r2) = psi1(r1) + psi2(r2) computed inside S.
RingMorphism rebuild_product_morphism(const ProductTriple& triple);

struct DirectLimit {
    RingPtr colimit;
    /// Canonical maps R_i -> colimit, one per ring of the chain.
    std::vector<RingMorphism> canonical;
};

/// Colimit of the finite chain R_0 -> R_1 -> ... -> R_k, which is R_k, with
/// the composite maps. Throws NonComposableChain.
DirectLimit direct_limit_chain(const std::vector<RingPtr>& rings, const std::vector<RingMorphism>& maps);

}  // namespace homposet
