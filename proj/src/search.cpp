#include "homposet/search.hpp"

#include <algorithm>
#include <sstream>

namespace homposet {

AdditiveBasis additive_basis(std::size_t size, const std::vector<Elem>& add, Elem zero, std::optional<Elem> first) {
    AdditiveBasis basis;
    auto plus = [&](Elem a, Elem b) { return add[a * size + b]; };

    // span_coords[x] valid once x is in the span.
    std::vector<std::vector<std::uint32_t>> span_coords(size);
    std::vector<bool> in_span(size, false);
    std::vector<Elem> span{zero};
    in_span[zero] = true;

    std::vector<Elem> candidates;
    if (first) candidates.push_back(*first);
    for (Elem x = 0; x < size; ++x) candidates.push_back(x);

    for (Elem g : candidates) {
        if (in_span[g]) continue;
        const std::size_t idx = basis.generators.size();
        for (Elem s : span) span_coords[s].push_back(0);

        // Relative order of g.
        std::uint64_t m = 1;
        Elem multiple = g;
        while (!in_span[multiple]) {
            multiple = plus(multiple, g);
            ++m;
        }
        std::vector<std::int64_t> relation(idx + 1, 0);
        for (std::size_t j = 0; j < idx; ++j) relation[j] = -static_cast<std::int64_t>(span_coords[multiple][j]);
        relation[idx] = static_cast<std::int64_t>(m);

        std::vector<Elem> grown;
        grown.reserve(span.size() * m);
        for (Elem s : span) grown.push_back(s);
        Elem step = g;
        for (std::uint64_t j = 1; j < m; ++j) {
            for (Elem s : span) {
                const Elem x = plus(s, step);
                span_coords[x] = span_coords[s];
                span_coords[x][idx] = static_cast<std::uint32_t>(j);
                in_span[x] = true;
                grown.push_back(x);
            }
            step = plus(step, g);
        }
        span = std::move(grown);

        basis.generators.push_back(g);
        basis.orders.push_back(m);
        basis.relations.push_back(std::move(relation));
        if (span.size() == size) break;
    }
    // Pad every relation to full length.
    const std::size_t k = basis.generators.size();
    for (auto& rel : basis.relations) rel.resize(k, 0);
    for (auto& c : span_coords) c.resize(k, 0);
    basis.coords = std::move(span_coords);
    return basis;
}

AdditiveBasis additive_basis(const FiniteRing& ring) {
    std::vector<Elem> add(ring.add_table().begin(), ring.add_table().end());
    return additive_basis(ring.size(), add, ring.zero(), ring.one());
}

namespace {

struct Search {
    const FiniteRing& src;
    const FiniteRing& tgt;
    const RingPtr& source;
    const RingPtr& target;
    AdditiveBasis basis;
    // levels[i]: source elements whose coordinates past i vanish.
    std::vector<std::vector<Elem>> levels;
    // multiples[y][c] = c * y in the target.
    std::vector<std::vector<Elem>> multiples;
    std::vector<Elem> chosen;
    std::vector<RingMorphism> found;

    Elem image_of(Elem x) const {
        Elem acc = tgt.zero();
        const auto& c = basis.coords[x];
        for (std::size_t j = 0; j < chosen.size(); ++j) {
            if (c[j] != 0) acc = tgt.add(acc, multiples[chosen[j]][c[j] % multiples[chosen[j]].size()]);
        }
        return acc;
    }

    bool relation_holds(std::size_t i, Elem candidate) const {
        const auto& rel = basis.relations[i];
        // orders[i] * candidate == sum_j coords_j * chosen_j  (rel[j] = -coords_j)
        Elem lhs = multiples[candidate][basis.orders[i] % multiples[candidate].size()];
        Elem rhs = tgt.zero();
        for (std::size_t j = 0; j < i; ++j) {
            if (rel[j] != 0) {
                auto c = static_cast<std::size_t>(-rel[j]);
                rhs = tgt.add(rhs, multiples[chosen[j]][c % multiples[chosen[j]].size()]);
            }
        }
        return lhs == rhs;
    }

    bool multiplicative_on_level(std::size_t i, std::vector<Elem>& images) const {
        const auto& level = levels[i];
        const auto k = basis.generators.size();
        for (Elem x : level) images[x] = image_of(x);
        auto in_level = [&](Elem z) {
            const auto& c = basis.coords[z];
            for (std::size_t j = i + 1; j < k; ++j) {
                if (c[j] != 0) return false;
            }
            return true;
        };
        for (Elem x : level) {
            for (Elem y : level) {
                const Elem xy = src.mul(x, y);
                if (!in_level(xy)) continue;
                if (images[xy] != tgt.mul(images[x], images[y])) return false;
            }
        }
        return true;
    }

    void run(std::size_t i, std::vector<Elem>& images) {
        if (i == basis.generators.size()) {
            std::vector<Elem> full(src.size());
            for (Elem x = 0; x < src.size(); ++x) full[x] = image_of(x);
            if (!find_morphism_violation(src, tgt, full)) found.push_back(RingMorphism::trusted(source, target, full));
            return;
        }
        std::vector<Elem> candidates;
        if (i == 0) {
            candidates.push_back(tgt.one());
        } else {
            for (Elem y = 0; y < tgt.size(); ++y) candidates.push_back(y);
        }
        for (Elem y : candidates) {
            if (!relation_holds(i, y)) continue;
            chosen.push_back(y);
            if (multiplicative_on_level(i, images)) run(i + 1, images);
            chosen.pop_back();
        }
    }
};

}  // namespace

std::vector<RingMorphism> enumerate_morphisms(const RingPtr& source, const RingPtr& target, const Limits& limits) {
    if (source->size() > limits.search_cap || target->size() > limits.search_cap) {
        std::ostringstream msg;
        msg << "morphism search " << source->size() << " -> " << target->size() << " exceeds search cap "
            << limits.search_cap;
        throw Error(ErrorCode::CapExceeded, msg.str());
    }
    Search search{*source, *target, source, target, additive_basis(*source), {}, {}, {}, {}};
    const auto k = search.basis.generators.size();
    search.levels.resize(k);
    for (Elem x = 0; x < source->size(); ++x) {
        const auto& c = search.basis.coords[x];
        std::size_t top = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (c[j] != 0) top = j;
        }
        for (std::size_t i = top; i < k; ++i) search.levels[i].push_back(x);
    }
    // multiples[y][c] for c up to the additive order of y (cyclic table).
    search.multiples.resize(target->size());
    for (Elem y = 0; y < target->size(); ++y) {
        auto& row = search.multiples[y];
        row.push_back(target->zero());
        Elem acc = y;
        while (acc != target->zero()) {
            row.push_back(acc);
            acc = target->add(acc, y);
        }
    }
    std::vector<Elem> images(source->size(), target->zero());
    search.run(0, images);
    std::sort(search.found.begin(), search.found.end(),
              [](const RingMorphism& a, const RingMorphism& b) { return a.images() < b.images(); });
    return std::move(search.found);
}

}  // namespace homposet
