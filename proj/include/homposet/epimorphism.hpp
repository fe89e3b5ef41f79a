#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homposet/morphism.hpp"

namespace homposet {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Diagonal of the Smith normal form of an integer matrix: the non-zero
/// elementary divisors d_1 | d_2 | ... followed by zeros up to min(rows, cols).
std::vector<BigInt> smith_diagonal(IntMatrix m);

/// Finite abelian group Z^cols / (row span of relations), summarized by its
/// invariant factors.
struct AbelianGroup {
    std::size_t generators = 0;
    /// Invariant factors greater than 1, plus a zero for each free summand.
    std::vector<BigInt> invariants;

    bool is_trivial() const { return invariants.empty(); }
    bool is_finite() const;
    /// Order of the group; only meaningful when finite.
    BigInt order() const;
    std::string describe() const;
};

AbelianGroup abelian_group_from_relations(std::size_t generators, const IntMatrix& relations);

/// S (x)_R (S / f(R)) as an abelian group, presented on products of additive
/// generators of S and of S/f(R), with the tensor relations of both factors
/// and the balancing relations s*f(r) (x) c = s (x) f(r)*c.
AbelianGroup tensor_cokernel(const RingMorphism& f);

/// f is an epimorphism of rings iff S (x)_R (S / f(R)) = 0.
bool is_ring_epimorphism(const RingMorphism& f);

}  // namespace homposet
