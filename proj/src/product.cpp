#include "homposet/product.hpp"

#include <algorithm>

namespace homposet {

namespace {

const provenance::Product& product_of(const RingPtr& ring) {
    const auto* prod = std::get_if<provenance::Product>(&ring->provenance());
    if (prod == nullptr) throw Error(ErrorCode::NotAProduct, "ring was not built as a product");
    return *prod;
}

}  // namespace

RingMorphism product_projection(const RingPtr& product, int side) {
    const auto& prod = product_of(product);
    const auto n2 = static_cast<Elem>(prod.right->size());
    std::vector<Elem> images(product->size());
    for (Elem x = 0; x < product->size(); ++x) images[x] = side == 0 ? x / n2 : x % n2;
    return RingMorphism::trusted(product, side == 0 ? prod.left : prod.right, std::move(images));
}

std::vector<Elem> product_injection(const RingPtr& product, int side) {
    const auto& prod = product_of(product);
    const auto n2 = static_cast<Elem>(prod.right->size());
    std::vector<Elem> images;
    if (side == 0) {
        for (Elem a = 0; a < prod.left->size(); ++a) images.push_back(a * n2 + prod.right->zero());
    } else {
        for (Elem b = 0; b < n2; ++b) images.push_back(prod.left->zero() * n2 + b);
    }
    return images;
}

Elem CornerRing::index_of(Elem s) const {
    auto it = std::lower_bound(embedding.begin(), embedding.end(), s);
    if (it == embedding.end() || *it != s) throw Error(ErrorCode::InvalidArgument, "element outside the corner");
    return static_cast<Elem>(it - embedding.begin());
}

CornerRing corner_ring(const RingPtr& ring, Elem e) {
    if (ring->mul(e, e) != e) throw Error(ErrorCode::InvalidArgument, "corner needs an idempotent");
    ElementSet members(ring->size());
    for (Elem s = 0; s < ring->size(); ++s) members.insert(ring->mul(ring->mul(e, s), e));
    CornerRing corner;
    corner.embedding = members.members();
    const std::size_t m = corner.embedding.size();
    std::vector<Elem> add(m * m), mul(m * m);
    for (Elem i = 0; i < m; ++i) {
        for (Elem j = 0; j < m; ++j) {
            add[i * m + j] = corner.index_of(ring->add(corner.embedding[i], corner.embedding[j]));
            mul[i * m + j] = corner.index_of(ring->mul(corner.embedding[i], corner.embedding[j]));
        }
    }
    corner.ring = FiniteRing::build(m, std::move(add), std::move(mul), corner.index_of(ring->zero()), corner.index_of(e),
                                    provenance::RawTable{"corner"}, true);
    return corner;
}

ProductTriple decompose_product_morphism(const RingMorphism& f) {
    const auto& prod = product_of(f.source());
    const auto& S = *f.target();
    const auto n2 = static_cast<Elem>(prod.right->size());
    const Elem e = f(prod.left->one() * n2 + prod.right->zero());
    const Elem one_minus_e = S.sub(S.one(), e);

    auto left_corner = corner_ring(f.target(), e);
    auto right_corner = corner_ring(f.target(), one_minus_e);

    std::vector<Elem> left_images(prod.left->size()), right_images(n2);
    for (Elem a = 0; a < prod.left->size(); ++a) left_images[a] = left_corner.index_of(f(a * n2 + prod.right->zero()));
    for (Elem b = 0; b < n2; ++b) right_images[b] = right_corner.index_of(f(prod.left->zero() * n2 + b));

    auto left = RingMorphism::checked(prod.left, left_corner.ring, std::move(left_images));
    auto right = RingMorphism::checked(prod.right, right_corner.ring, std::move(right_images));
    return ProductTriple{f.source(), f.target(), e, std::move(left_corner), std::move(right_corner), std::move(left),
                         std::move(right)};
}

RingMorphism rebuild_product_morphism(const ProductTriple& t) {
    const auto& prod = product_of(t.source);
    const auto n2 = static_cast<Elem>(prod.right->size());
    const auto& S = *t.target;
    std::vector<Elem> images(t.source->size());
    for (Elem x = 0; x < images.size(); ++x) {
        const Elem a = t.left_corner.embedding[t.left(x / n2)];
        const Elem b = t.right_corner.embedding[t.right(x % n2)];
        images[x] = S.add(a, b);
    }
    return RingMorphism::checked(t.source, t.target, std::move(images));
}

DirectLimit direct_limit_chain(const std::vector<RingPtr>& rings, const std::vector<RingMorphism>& maps) {
    if (rings.empty()) throw Error(ErrorCode::NonComposableChain, "empty chain");
    if (maps.size() + 1 != rings.size()) {
        throw Error(ErrorCode::NonComposableChain, "a chain of k+1 rings needs k connecting maps");
    }
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (maps[i].source() != rings[i] || maps[i].target() != rings[i + 1]) {
            throw Error(ErrorCode::NonComposableChain, "map " + std::to_string(i) + " does not connect consecutive rings");
        }
    }
    DirectLimit out;
    out.colimit = rings.back();
    out.canonical.resize(rings.size(), RingMorphism::identity(rings.back()));
    for (std::size_t i = rings.size() - 1; i-- > 0;) out.canonical[i] = compose(out.canonical[i + 1], maps[i]);
    return out;
}

}  // namespace homposet
