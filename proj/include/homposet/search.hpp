#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homposet/morphism.hpp"

namespace homposet {

/// Polycyclic presentation of a finite abelian group found greedily.
///
/// Generator i has relative order orders[i]: the least m > 0 with
/// m * generators[i] in the span of the earlier generators. Every element x
/// has unique coordinates coords[x] with 0 <= coords[x][i] < orders[i].
/// relations[i] is the integer row  orders[i] * e_i - coords(orders[i] * g_i),
/// and these rows generate all relations among the generators.
struct AdditiveBasis {
    std::vector<Elem> generators;
    std::vector<std::uint64_t> orders;
    std::vector<std::vector<std::int64_t>> relations;
    std::vector<std::vector<std::uint32_t>> coords;
};

/// Greedy basis of the group with addition table `add` (size x size). The
/// candidate `first`, when given, is tried before ascending indices.
AdditiveBasis additive_basis(std::size_t size, const std::vector<Elem>& add, Elem zero,
                             std::optional<Elem> first = std::nullopt);

AdditiveBasis additive_basis(const FiniteRing& ring);

/// All unital ring morphisms source -> target, sorted by image array.
/// Backtracks over images of an additive generating set of the source (the
/// identity first, forced to the identity) and prunes on additive relations
/// and on multiplicativity over the span built so far. Throws CapExceeded
/// rather than truncating.
std::vector<RingMorphism> enumerate_morphisms(const RingPtr& source, const RingPtr& target,
                                              const Limits& limits = {});

}  // namespace homposet
