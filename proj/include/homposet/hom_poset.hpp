#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "homposet/morphism.hpp"

namespace homposet {

/// The pair (ker f, f^-1(U(S))) attached to a morphism f: R -> S.
struct HomPair {
    Ideal ideal;
    MultiplicativeSet mset;

    const RingPtr& ring() const { return ideal.ring; }

    friend bool operator==(const HomPair& a, const HomPair& b) { return a.ideal == b.ideal && a.mset == b.mset; }
};

/// Ideal first, then multiplicative set, each in canonical set order.
bool canonical_less(const HomPair& a, const HomPair& b);

/// Adjoined greatest element of Hom-bar(R).
struct Top {
    friend bool operator==(Top, Top) { return true; }
};

using HomBarElement = std::variant<HomPair, Top>;

HomPair pair_of_morphism(const RingMorphism& f);

/// Clause-by-clause check of the four necessary conditions on a pair.
struct PairValidation {
    bool submonoid = false;          // M is a multiplicative submonoid
    bool contains_units = false;     // U(R) is contained in M
    bool stable_and_disjoint = false;  // M = M + a = M + a + J(R), a and M disjoint
    bool regular_modulo_ideal = false;  // every m + a is regular in R/a
    std::vector<std::string> witnesses;

    bool ok() const { return submonoid && contains_units && stable_and_disjoint && regular_modulo_ideal; }
};

PairValidation validate_pair(const RingPtr& ring, const ElementSet& ideal, const ElementSet& mset);

/// A finite poset of pairs, optionally with an adjoined top element stored
/// after the pairs (index pairs().size()).
class HomPoset {
public:
    HomPoset(RingPtr ring, std::vector<HomPair> pairs, bool adjoin_top);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<HomPair>& pairs() const noexcept { return pairs_; }
    bool top_adjoined() const noexcept { return top_adjoined_; }

    /// Number of elements, top included.
    std::size_t size() const noexcept { return pairs_.size() + (top_adjoined_ ? 1 : 0); }
    bool is_top(std::size_t i) const noexcept { return top_adjoined_ && i == pairs_.size(); }
    std::size_t top() const;

    bool leq(std::size_t i, std::size_t j) const { return order_.at(i).at(j); }
    std::optional<std::size_t> index_of(const HomPair& p) const;
    std::optional<std::size_t> index_of(const HomBarElement& e) const;
    HomBarElement element(std::size_t i) const;

    /// Least element; throws when none exists.
    std::size_t least() const;
    std::optional<std::size_t> greatest() const;
    /// Greatest lower bound, if one exists.
    std::optional<std::size_t> meet(std::size_t i, std::size_t j) const;
    /// Least upper bound, if one exists.
    std::optional<std::size_t> join(std::size_t i, std::size_t j) const;
    /// Maximal elements among the pairs (top excluded).
    std::vector<std::size_t> maximal() const;

private:
    RingPtr ring_;
    std::vector<HomPair> pairs_;
    bool top_adjoined_;
    std::vector<std::vector<bool>> order_;
};

/// Hom(R) for a finite ring: one pair (a, pi_a^-1(U(R/a))) per proper ideal,
/// ordered by inclusion in both components. For finite R every regular
/// element of R/a is a unit, which forces M for each kernel.
HomPoset hom_poset(const RingPtr& ring, bool adjoin_top = false);

/// Componentwise inclusion. Throws RingMismatch.
bool leq(const HomPair& p, const HomPair& q);
/// (a ∩ a', M ∩ M'). Throws RingMismatch.
HomPair meet(const HomPair& p, const HomPair& q);
/// Least upper bound in Hom-bar(R). Throws InvalidArgument when the poset
/// has no top or an argument is not in it.
HomBarElement join_ext(const HomBarElement& p, const HomBarElement& q, const HomPoset& bar);

/// Throws InvalidArgument when the poset has an adjoined top.
std::vector<HomPair> max_elements(const HomPoset& poset);

struct SpecEntry {
    Ideal prime;
    HomPair pair;
};

/// Prime ideals of a commutative ring matched with the maximal elements of
/// Hom(R); each maximal pair is (P, R \ P). Throws NotCommutative.
std::vector<SpecEntry> spec_correspondence(const RingPtr& ring);

/// (f^-1(a'), f^-1(M')) for f: R -> R' and a pair of R'.
HomPair pull_back(const RingMorphism& f, const HomPair& pair);

/// Hom(f): Hom(R') -> Hom(R) as an index map between the two posets.
struct HomMap {
    HomPoset domain;    // Hom(R')
    HomPoset codomain;  // Hom(R)
    std::vector<std::size_t> image;

    bool is_order_preserving() const;
};

HomMap hom_functor(const RingMorphism& f);

/// (a, pi^-1(U(R/a))), the least element of the fiber over a proper ideal.
HomPair least_of_fiber(const RingPtr& ring, const Ideal& ideal);

/// f^-1(U(S)) = U(R).
bool is_local_morphism(const RingMorphism& f);
/// ker f inside J(R) and pair(f) the least element of its fiber.
bool satisfies_local_fiber_criterion(const RingMorphism& f);

/// Hom-bar(R1 x R2) against Hom-bar(R1) x Hom-bar(R2), built by restricting
/// the canonical projections to the two corners.
struct ProductPosetIso {
    HomPoset product;
    HomPoset left;
    HomPoset right;
    /// image[i] = (index in left, index in right) of product element i.
    std::vector<std::pair<std::size_t, std::size_t>> image;
    bool bijective = false;
    bool order_isomorphism = false;
};

ProductPosetIso product_decompose_poset(const RingPtr& left, const RingPtr& right, const Limits& limits = {});

struct DivCprMax {
    std::vector<HomPair> div;
    std::vector<HomPair> cpr;
    std::vector<HomPair> max;
    bool chain_holds = false;
};

/// Div from morphisms into finite fields of order at most `field_bound`
/// (finite division rings are fields), Cpr from completely prime ideals
/// whose pair lies in Hom(R), Max from the maximal elements.
DivCprMax div_cpr_max(const RingPtr& ring, std::size_t field_bound, const Limits& limits = {});

/// Hom(colimit) against the inverse limit of the Hom posets of a finite chain.
struct DirectLimitReport {
    std::size_t colimit_size = 0;
    std::size_t inverse_limit_size = 0;
    /// Compatible tuples, one index per chain position.
    std::vector<std::vector<std::size_t>> tuples;
    /// image[i] = tuple index of colimit element i.
    std::vector<std::size_t> image;
    bool bijective = false;
    bool preserves_order = false;
    bool reflects_order = false;

    bool isomorphism() const { return bijective && preserves_order && reflects_order; }
};

DirectLimitReport verify_direct_limit(const std::vector<RingPtr>& rings, const std::vector<RingMorphism>& maps);

/// Covering relation, sorted.
std::vector<std::pair<std::size_t, std::size_t>> hasse(const HomPoset& poset);

}  // namespace homposet
