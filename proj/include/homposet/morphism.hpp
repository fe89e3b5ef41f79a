#pragma once

#include <vector>

#include "homposet/finite_ring.hpp"

namespace homposet {

/// Two-sided ideal of a finite ring.
struct Ideal {
    RingPtr ring;
    ElementSet members;

    /// Verifies the ideal axioms; throws NotAnIdeal otherwise.
    static Ideal checked(const RingPtr& ring, ElementSet members);
    static Ideal zero(const RingPtr& ring);
    static Ideal whole(const RingPtr& ring);

    bool is_proper() const { return !members.is_full(); }
    bool contains(Elem x) const { return members.contains(x); }

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.ring == b.ring && a.members == b.members; }
};

bool is_ideal(const FiniteRing& ring, const ElementSet& members);

/// Multiplicatively closed subset containing the identity.
struct MultiplicativeSet {
    RingPtr ring;
    ElementSet members;

    /// Verifies 1 in members and closure under products; throws NotASubmonoid.
    static MultiplicativeSet checked(const RingPtr& ring, ElementSet members);

    bool contains(Elem x) const { return members.contains(x); }

    friend bool operator==(const MultiplicativeSet& a, const MultiplicativeSet& b) {
        return a.ring == b.ring && a.members == b.members;
    }
};

bool is_submonoid(const FiniteRing& ring, const ElementSet& members);

/// Unit-preserving ring morphism between finite rings, stored as the image of
/// every source element.
class RingMorphism {
public:
    /// Checks that `images` preserves 0, 1, + and x; throws InvalidArgument.
    static RingMorphism checked(RingPtr source, RingPtr target, std::vector<Elem> images);
    /// No verification; for callers that construct morphisms by design.
    static RingMorphism trusted(RingPtr source, RingPtr target, std::vector<Elem> images);
    static RingMorphism identity(const RingPtr& ring);

    const RingPtr& source() const noexcept { return source_; }
    const RingPtr& target() const noexcept { return target_; }
    const std::vector<Elem>& images() const noexcept { return images_; }
    Elem operator()(Elem x) const { return images_.at(x); }

    Ideal kernel() const;
    ElementSet image() const;
    ElementSet preimage(const ElementSet& subset) const;
    bool is_injective() const;
    bool is_surjective() const;

    friend bool operator==(const RingMorphism& a, const RingMorphism& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
    }

private:
    RingMorphism(RingPtr source, RingPtr target, std::vector<Elem> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

    RingPtr source_;
    RingPtr target_;
    std::vector<Elem> images_;
};

/// Returns g after f. Throws NonComposableChain when f's target is not g's source.
RingMorphism compose(const RingMorphism& g, const RingMorphism& f);

/// Returns a description of why `images` fails to be a unital ring morphism.
std::optional<std::string> find_morphism_violation(const FiniteRing& source, const FiniteRing& target,
                                                   const std::vector<Elem>& images);

/// The unique morphism Z -> S, described by its kernel modulus (the
/// characteristic of S).
struct IntegerMorphism {
    RingPtr target;

    std::uint64_t kernel_modulus() const { return target->characteristic(); }
    /// Image of an integer.
    Elem operator()(std::int64_t z) const;
};

struct Quotient {
    RingPtr ring;
    RingMorphism projection;
};

/// R/a on coset representatives together with the surjection R -> R/a.
Quotient make_quotient(const RingPtr& ring, const Ideal& ideal);

}  // namespace homposet
