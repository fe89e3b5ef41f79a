#include "homposet/morphism.hpp"

#include <sstream>

namespace homposet {

bool is_ideal(const FiniteRing& ring, const ElementSet& members) {
    if (members.universe() != ring.size() || !members.contains(ring.zero())) return false;
    const auto elems = members.members();
    for (Elem a : elems) {
        if (!members.contains(ring.neg(a))) return false;
        for (Elem b : elems) {
            if (!members.contains(ring.add(a, b))) return false;
        }
        for (Elem r = 0; r < ring.size(); ++r) {
            if (!members.contains(ring.mul(r, a)) || !members.contains(ring.mul(a, r))) return false;
        }
    }
    return true;
}

Ideal Ideal::checked(const RingPtr& ring, ElementSet members) {
    if (!is_ideal(*ring, members)) throw Error(ErrorCode::NotAnIdeal, "subset is not a two-sided ideal");
    return Ideal{ring, std::move(members)};
}

Ideal Ideal::zero(const RingPtr& ring) { return Ideal{ring, ElementSet(ring->size(), {ring->zero()})}; }

Ideal Ideal::whole(const RingPtr& ring) { return Ideal{ring, ElementSet::full(ring->size())}; }

bool is_submonoid(const FiniteRing& ring, const ElementSet& members) {
    if (members.universe() != ring.size() || !members.contains(ring.one())) return false;
    const auto elems = members.members();
    for (Elem a : elems) {
        for (Elem b : elems) {
            if (!members.contains(ring.mul(a, b))) return false;
        }
    }
    return true;
}

MultiplicativeSet MultiplicativeSet::checked(const RingPtr& ring, ElementSet members) {
    if (!is_submonoid(*ring, members)) {
        throw Error(ErrorCode::NotASubmonoid, "subset is not a multiplicative submonoid");
    }
    return MultiplicativeSet{ring, std::move(members)};
}

std::optional<std::string> find_morphism_violation(const FiniteRing& source, const FiniteRing& target,
                                                   const std::vector<Elem>& images) {
    if (images.size() != source.size()) return "image array has wrong length";
    for (Elem x : images) {
        if (x >= target.size()) return "image outside target carrier";
    }
    if (images[source.one()] != target.one()) return "identity not preserved";
    if (images[source.zero()] != target.zero()) return "zero not preserved";
    const auto n = static_cast<Elem>(source.size());
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            if (images[source.add(a, b)] != target.add(images[a], images[b])) {
                std::ostringstream msg;
                msg << "addition not preserved at (" << a << ", " << b << ")";
                return msg.str();
            }
            if (images[source.mul(a, b)] != target.mul(images[a], images[b])) {
                std::ostringstream msg;
                msg << "multiplication not preserved at (" << a << ", " << b << ")";
                return msg.str();
            }
        }
    }
    return std::nullopt;
}

RingMorphism RingMorphism::checked(RingPtr source, RingPtr target, std::vector<Elem> images) {
    if (!source || !target) throw Error(ErrorCode::InvalidArgument, "null ring");
    if (auto bad = find_morphism_violation(*source, *target, images)) {
        throw Error(ErrorCode::InvalidArgument, "not a ring morphism: " + *bad);
    }
    return RingMorphism(std::move(source), std::move(target), std::move(images));
}

RingMorphism RingMorphism::trusted(RingPtr source, RingPtr target, std::vector<Elem> images) {
    return RingMorphism(std::move(source), std::move(target), std::move(images));
}

RingMorphism RingMorphism::identity(const RingPtr& ring) {
    std::vector<Elem> images(ring->size());
    for (Elem x = 0; x < ring->size(); ++x) images[x] = x;
    return RingMorphism(ring, ring, std::move(images));
}

Ideal RingMorphism::kernel() const {
    ElementSet k(source_->size());
    for (Elem x = 0; x < images_.size(); ++x) {
        if (images_[x] == target_->zero()) k.insert(x);
    }
    return Ideal{source_, std::move(k)};
}

ElementSet RingMorphism::image() const {
    ElementSet im(target_->size());
    for (Elem y : images_) im.insert(y);
    return im;
}

ElementSet RingMorphism::preimage(const ElementSet& subset) const {
    ElementSet pre(source_->size());
    for (Elem x = 0; x < images_.size(); ++x) {
        if (subset.contains(images_[x])) pre.insert(x);
    }
    return pre;
}

bool RingMorphism::is_injective() const { return kernel().members.count() == 1; }

bool RingMorphism::is_surjective() const { return image().is_full(); }

RingMorphism compose(const RingMorphism& g, const RingMorphism& f) {
    if (f.target() != g.source()) {
        throw Error(ErrorCode::NonComposableChain, "target of the first map is not the source of the second");
    }
    std::vector<Elem> images(f.images().size());
    for (Elem x = 0; x < images.size(); ++x) images[x] = g(f(x));
    return RingMorphism::trusted(f.source(), g.target(), std::move(images));
}

Elem IntegerMorphism::operator()(std::int64_t z) const {
    const auto n = static_cast<std::int64_t>(kernel_modulus());
    auto r = static_cast<std::uint64_t>(((z % n) + n) % n);
    Elem acc = target->zero();
    for (std::uint64_t i = 0; i < r; ++i) acc = target->add(acc, target->one());
    return acc;
}

Quotient make_quotient(const RingPtr& ring, const Ideal& ideal) {
    if (ideal.ring != ring) throw Error(ErrorCode::RingMismatch, "ideal belongs to a different ring");
    if (!is_ideal(*ring, ideal.members)) throw Error(ErrorCode::NotAnIdeal, "subset is not a two-sided ideal");
    if (!ideal.is_proper()) throw Error(ErrorCode::ImproperIdeal, "quotient by the whole ring is the zero ring");

    const std::size_t n = ring->size();
    constexpr Elem unassigned = ~Elem{0};
    std::vector<Elem> projection(n, unassigned);
    std::vector<Elem> reps;
    const auto members = ideal.members.members();
    for (Elem x = 0; x < n; ++x) {
        if (projection[x] != unassigned) continue;
        const auto cls = static_cast<Elem>(reps.size());
        reps.push_back(x);
        for (Elem a : members) projection[ring->add(x, a)] = cls;
    }
    const std::size_t m = reps.size();
    std::vector<Elem> add(m * m), mul(m * m);
    for (Elem i = 0; i < m; ++i) {
        for (Elem j = 0; j < m; ++j) {
            add[i * m + j] = projection[ring->add(reps[i], reps[j])];
            mul[i * m + j] = projection[ring->mul(reps[i], reps[j])];
        }
    }
    auto quotient = FiniteRing::build(m, std::move(add), std::move(mul), projection[ring->zero()],
                                      projection[ring->one()],
                                      provenance::Quotient{ring, ideal.members, reps, projection}, false);
    auto pi = RingMorphism::trusted(ring, quotient, projection);
    return Quotient{std::move(quotient), std::move(pi)};
}

RingPtr regenerate(const FiniteRing& ring, const Limits& limits) {
    return std::visit(
        [&](const auto& prov) -> RingPtr {
            using T = std::decay_t<decltype(prov)>;
            if constexpr (std::is_same_v<T, provenance::ZMod>) {
                return make_zmod(prov.n, limits);
            } else if constexpr (std::is_same_v<T, provenance::Field>) {
                return make_finite_field(prov.p, prov.k, limits);
            } else if constexpr (std::is_same_v<T, provenance::Product>) {
                return make_product(prov.left, prov.right, limits);
            } else if constexpr (std::is_same_v<T, provenance::Matrix>) {
                return make_matrix_ring(prov.base, prov.k, limits);
            } else if constexpr (std::is_same_v<T, provenance::Quotient>) {
                return make_quotient(prov.base, Ideal{prov.base, prov.ideal}).ring;
            } else {
                std::vector<Elem> add(ring.add_table().begin(), ring.add_table().end());
                std::vector<Elem> mul(ring.mul_table().begin(), ring.mul_table().end());
                return FiniteRing::build(ring.size(), std::move(add), std::move(mul), ring.zero(), ring.one(), prov,
                                         ring.is_zero_ring());
            }
        },
        ring.provenance());
}

}  // namespace homposet
