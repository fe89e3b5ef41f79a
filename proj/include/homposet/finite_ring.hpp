#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "homposet/element_set.hpp"
#include "homposet/error.hpp"

namespace homposet {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// How a ring was built. Structural tags can regenerate the stored tables.
namespace provenance {

struct ZMod {
    std::uint32_t n;
};

/// F_p[x]/(f); `modulus` holds the coefficients of f low-degree first,
/// including the leading 1.
struct Field {
    std::uint32_t p;
    std::uint32_t k;
    std::vector<std::uint32_t> modulus;
};

/// Element (a, b) is stored at index a * |right| + b.
struct Product {
    RingPtr left;
    RingPtr right;
};

/// Row-major k x k matrices; the first entry is the most significant digit.
struct Matrix {
    RingPtr base;
    std::uint32_t k;
};

/// Quotient element i is the coset of representatives[i], the least member
/// of the coset in the base carrier; projection maps base elements to cosets.
struct Quotient {
    RingPtr base;
    ElementSet ideal;
    std::vector<Elem> representatives;
    std::vector<Elem> projection;
};

struct RawTable {
    std::string label;
};

}  // namespace provenance

using Provenance = std::variant<provenance::ZMod, provenance::Field, provenance::Product,
                                provenance::Matrix, provenance::Quotient, provenance::RawTable>;

/// A finite associative unital ring given by its addition and multiplication
/// tables. Instances are immutable and shared through RingPtr.
class FiniteRing {
public:
    /// Builds a ring from explicit tables after checking every ring axiom.
    /// Rejects the zero ring.
    static RingPtr from_tables(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                               Elem one, Provenance prov = provenance::RawTable{"raw"});

    std::size_t size() const noexcept { return size_; }
    Elem zero() const noexcept { return zero_; }
    Elem one() const noexcept { return one_; }

    Elem add(Elem a, Elem b) const noexcept { return add_[a * size_ + b]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * size_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    std::span<const Elem> add_table() const noexcept { return add_; }
    std::span<const Elem> mul_table() const noexcept { return mul_; }

    const Provenance& provenance() const noexcept { return prov_; }

    bool is_zero_ring() const noexcept { return size_ == 1; }
    bool is_commutative() const noexcept { return commutative_; }

    /// Table identity: same size, same zero/one and identical tables.
    bool same_tables(const FiniteRing& other) const noexcept;

    /// Canonical textual description (see description.hpp for the grammar).
    std::string describe() const;

    /// Additive order of an element.
    std::uint64_t additive_order(Elem a) const;

    /// Additive order of the identity.
    std::uint64_t characteristic() const { return additive_order(one_); }

    // Internal factory used by the structural constructors and by corner
    // rings. `allow_zero` admits the one-element ring; only corner rings of
    // an idempotent use it.
    static RingPtr build(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                         Provenance prov, bool allow_zero);

private:
    FiniteRing() = default;

    std::size_t size_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    Elem zero_ = 0;
    Elem one_ = 0;
    bool commutative_ = false;
    Provenance prov_;
};

/// Returns a description of the first violated ring axiom, or nullopt.
/// Exhaustive over all triples.
std::optional<std::string> find_axiom_violation(const FiniteRing& ring);

/// Value-level handle on one element; arithmetic requires matching rings.
struct RingElement {
    RingPtr ring;
    Elem index;

    RingElement operator+(const RingElement& other) const;
    RingElement operator*(const RingElement& other) const;
    RingElement operator-() const;
    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring == b.ring && a.index == b.index;
    }
};

// ---------------------------------------------------------------------------
// Constructors

RingPtr make_zmod(std::uint32_t n, const Limits& limits = {});

/// Field of order p^k built as F_p[x]/(f) with f the lexicographically
/// smallest monic irreducible of degree k, comparing coefficients from the
/// constant term upward.
RingPtr make_finite_field(std::uint32_t p, std::uint32_t k, const Limits& limits = {});

RingPtr make_product(const RingPtr& left, const RingPtr& right, const Limits& limits = {});

/// Full k x k matrix ring over a field.
RingPtr make_matrix_ring(const RingPtr& base, std::uint32_t k, const Limits& limits = {});

/// Rebuilds a ring from its structural provenance. RawTable provenance
/// returns a copy of the stored tables.
RingPtr regenerate(const FiniteRing& ring, const Limits& limits = {});

/// Lexicographically smallest monic irreducible polynomial of degree k over
/// F_p (coefficients low-degree first, leading 1 included).
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace homposet
