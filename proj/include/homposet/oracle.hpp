#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homposet/hom_poset.hpp"

namespace homposet::oracle {

/// Constructor-generated ring catalog: Z/n, finite fields, binary products,
/// M_2(F_2) and every quotient of those by proper ideals, all of order at
/// most `bound`. Rings with identical tables are kept once. The catalog is
/// closed under the constructors, not complete up to isomorphism.
class Catalog {
public:
    static Catalog generate(std::size_t bound, const Limits& limits = {});

    std::size_t bound() const noexcept { return bound_; }
    const std::vector<RingPtr>& rings() const noexcept { return rings_; }
    bool empty() const noexcept { return rings_.empty(); }
    std::optional<std::size_t> find(const FiniteRing& ring) const;

private:
    std::size_t bound_ = 0;
    std::vector<RingPtr> rings_;
};

/// Every pair (ker f, f^-1(U(S))) over all catalog rings S and all
/// morphisms f: R -> S, deduplicated and canonically sorted.
std::vector<HomPair> realized_pairs(const RingPtr& ring, const Catalog& catalog, const Limits& limits = {});

struct ConstructionReport {
    std::vector<HomPair> realized;
    std::vector<HomPair> constructed;
    bool sound = false;     // realized inside constructed
    bool complete = false;  // constructed inside realized
    bool passed() const { return sound && complete; }
};

ConstructionReport verify_hom_construction(const RingPtr& ring, const Catalog& catalog, const Limits& limits = {});

struct ClaimResult {
    std::string id;
    std::string statement;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> witnesses;

    bool passed() const { return failures == 0; }
};

struct Report {
    std::size_t bound = 0;
    std::size_t ring_count = 0;
    bool degenerate = false;
    std::vector<ClaimResult> claims;

    bool all_passed() const;
    const ClaimResult* find(const std::string& id) const;
    /// Deterministic JSON document.
    std::string to_json() const;
    std::string to_text() const;
};

struct Options {
    /// Claim ids to run; empty runs all.
    std::vector<std::string> only;
    /// Adds a pair with zero inside M to the pair-invariant check.
    bool inject_corrupt_pair = false;
    Limits limits{256, 32};
};

/// Identifiers of every claim verify_theorems can run, in report order.
const std::vector<std::string>& claim_ids();

Report verify_theorems(const Catalog& catalog, const Options& options = {});

}  // namespace homposet::oracle
