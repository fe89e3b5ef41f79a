#include "homposet/hom_poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "homposet/finite_ring.hpp"
#include "homposet/product.hpp"
#include "homposet/search.hpp"
#include "homposet/structure.hpp"

namespace homposet {

bool canonical_less(const HomPair& a, const HomPair& b) {
    if (!(a.ideal.members == b.ideal.members)) return canonical_less(a.ideal.members, b.ideal.members);
    return canonical_less(a.mset.members, b.mset.members);
}

HomPair pair_of_morphism(const RingMorphism& f) {
    const auto target_units = units(f.target());
    return HomPair{f.kernel(), MultiplicativeSet{f.source(), f.preimage(target_units.members)}};
}

PairValidation validate_pair(const RingPtr& ring, const ElementSet& ideal, const ElementSet& mset) {
    PairValidation v;
    const auto n = static_cast<Elem>(ring->size());
    auto witness = [&](const std::string& text) { v.witnesses.push_back(text); };

    if (ideal.universe() != n || mset.universe() != n) {
        witness("subsets are not over the ring's carrier");
        return v;
    }
    if (!is_ideal(*ring, ideal)) witness("ideal component is not a two-sided ideal");

    v.submonoid = is_submonoid(*ring, mset);
    if (!v.submonoid) witness("M is not a multiplicative submonoid");

    const auto u = units(ring).members;
    v.contains_units = u.is_subset_of(mset);
    if (!v.contains_units) {
        for (Elem x : u.members()) {
            if (!mset.contains(x)) {
                witness("unit " + std::to_string(x) + " missing from M");
                break;
            }
        }
    }

    v.stable_and_disjoint = true;
    const auto j = jacobson_radical(ring).members;
    for (Elem m : mset.members()) {
        for (Elem a : ideal.members()) {
            const Elem ma = ring->add(m, a);
            if (!mset.contains(ma)) {
                v.stable_and_disjoint = false;
                witness("M + a not inside M: " + std::to_string(m) + " + " + std::to_string(a) + " = " +
                        std::to_string(ma));
                break;
            }
            for (Elem x : j.members()) {
                if (!mset.contains(ring->add(ma, x))) {
                    v.stable_and_disjoint = false;
                    witness("M + a + J(R) not inside M at " + std::to_string(m) + " + " + std::to_string(a) + " + " +
                            std::to_string(x));
                    break;
                }
            }
            if (!v.stable_and_disjoint) break;
        }
        if (!v.stable_and_disjoint) break;
    }
    if (ideal.intersects(mset)) {
        v.stable_and_disjoint = false;
        witness("a and M intersect at " + std::to_string((ideal & mset).members().front()));
    }

    v.regular_modulo_ideal = true;
    for (Elem m : mset.members()) {
        for (Elem r = 0; r < n; ++r) {
            if (ideal.contains(r)) continue;
            if (ideal.contains(ring->mul(r, m)) || ideal.contains(ring->mul(m, r))) {
                v.regular_modulo_ideal = false;
                std::ostringstream msg;
                msg << m << " is a zero-divisor modulo a: " << m << " * " << r << " or " << r << " * " << m
                    << " lies in a";
                witness(msg.str());
                break;
            }
        }
        if (!v.regular_modulo_ideal) break;
    }
    return v;
}

HomPoset::HomPoset(RingPtr ring, std::vector<HomPair> pairs, bool adjoin_top)
    : ring_(std::move(ring)), pairs_(std::move(pairs)), top_adjoined_(adjoin_top) {
    const std::size_t n = size();
    order_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        for (std::size_t j = 0; j < pairs_.size(); ++j) {
            order_[i][j] = pairs_[i].ideal.members.is_subset_of(pairs_[j].ideal.members) &&
                           pairs_[i].mset.members.is_subset_of(pairs_[j].mset.members);
        }
    }
    if (top_adjoined_) {
        for (std::size_t i = 0; i < n; ++i) order_[i][n - 1] = true;
    }
}

std::size_t HomPoset::top() const {
    if (!top_adjoined_) throw Error(ErrorCode::InvalidArgument, "poset has no adjoined top");
    return pairs_.size();
}

std::optional<std::size_t> HomPoset::index_of(const HomPair& p) const {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].ideal.members == p.ideal.members && pairs_[i].mset.members == p.mset.members) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> HomPoset::index_of(const HomBarElement& e) const {
    if (std::holds_alternative<Top>(e)) {
        if (!top_adjoined_) return std::nullopt;
        return pairs_.size();
    }
    return index_of(std::get<HomPair>(e));
}

HomBarElement HomPoset::element(std::size_t i) const {
    if (is_top(i)) return Top{};
    return pairs_.at(i);
}

std::size_t HomPoset::least() const {
    for (std::size_t i = 0; i < size(); ++i) {
        bool below_all = true;
        for (std::size_t j = 0; j < size() && below_all; ++j) below_all = order_[i][j];
        if (below_all) return i;
    }
    throw Error(ErrorCode::Internal, "poset has no least element");
}

std::optional<std::size_t> HomPoset::greatest() const {
    for (std::size_t i = 0; i < size(); ++i) {
        bool above_all = true;
        for (std::size_t j = 0; j < size() && above_all; ++j) above_all = order_[j][i];
        if (above_all) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> HomPoset::meet(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> lower;
    for (std::size_t k = 0; k < size(); ++k) {
        if (order_[k][i] && order_[k][j]) lower.push_back(k);
    }
    for (std::size_t g : lower) {
        if (std::all_of(lower.begin(), lower.end(), [&](std::size_t k) { return order_[k][g]; })) return g;
    }
    return std::nullopt;
}

std::optional<std::size_t> HomPoset::join(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> upper;
    for (std::size_t k = 0; k < size(); ++k) {
        if (order_[i][k] && order_[j][k]) upper.push_back(k);
    }
    for (std::size_t l : upper) {
        if (std::all_of(upper.begin(), upper.end(), [&](std::size_t k) { return order_[l][k]; })) return l;
    }
    return std::nullopt;
}

std::vector<std::size_t> HomPoset::maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        bool is_max = true;
        for (std::size_t j = 0; j < pairs_.size() && is_max; ++j) {
            if (j != i && order_[i][j]) is_max = false;
        }
        if (is_max) out.push_back(i);
    }
    return out;
}

HomPair least_of_fiber(const RingPtr& ring, const Ideal& ideal) {
    if (ideal.ring != ring) throw Error(ErrorCode::RingMismatch, "ideal belongs to a different ring");
    auto q = make_quotient(ring, ideal);
    return HomPair{ideal, MultiplicativeSet{ring, q.projection.preimage(units(q.ring).members)}};
}

HomPoset hom_poset(const RingPtr& ring, bool adjoin_top) {
    std::vector<HomPair> pairs;
    for (const auto& ideal : enumerate_ideals(ring)) {
        if (ideal.is_proper()) pairs.push_back(least_of_fiber(ring, ideal));
    }
    std::sort(pairs.begin(), pairs.end(), [](const HomPair& a, const HomPair& b) { return canonical_less(a, b); });
    return HomPoset(ring, std::move(pairs), adjoin_top);
}

bool leq(const HomPair& p, const HomPair& q) {
    if (p.ring() != q.ring()) throw Error(ErrorCode::RingMismatch, "pairs of different rings");
    return p.ideal.members.is_subset_of(q.ideal.members) && p.mset.members.is_subset_of(q.mset.members);
}

HomPair meet(const HomPair& p, const HomPair& q) {
    if (p.ring() != q.ring()) throw Error(ErrorCode::RingMismatch, "pairs of different rings");
    return HomPair{Ideal{p.ring(), p.ideal.members & q.ideal.members},
                   MultiplicativeSet{p.ring(), p.mset.members & q.mset.members}};
}

HomBarElement join_ext(const HomBarElement& p, const HomBarElement& q, const HomPoset& bar) {
    if (!bar.top_adjoined()) throw Error(ErrorCode::InvalidArgument, "joins need the poset with adjoined top");
    auto i = bar.index_of(p);
    auto j = bar.index_of(q);
    if (!i || !j) throw Error(ErrorCode::InvalidArgument, "element not in poset");
    auto k = bar.join(*i, *j);
    if (!k) throw Error(ErrorCode::Internal, "no least upper bound in Hom-bar");
    return bar.element(*k);
}

std::vector<HomPair> max_elements(const HomPoset& poset) {
    if (poset.top_adjoined()) throw Error(ErrorCode::InvalidArgument, "maximal elements are taken without the top");
    std::vector<HomPair> out;
    for (auto i : poset.maximal()) out.push_back(poset.pairs()[i]);
    return out;
}

std::vector<SpecEntry> spec_correspondence(const RingPtr& ring) {
    if (!ring->is_commutative()) throw Error(ErrorCode::NotCommutative, "spectrum correspondence needs a commutative ring");
    const auto maxes = max_elements(hom_poset(ring));
    const auto primes = prime_ideals(ring);
    if (primes.size() != maxes.size()) throw Error(ErrorCode::Internal, "prime ideals and maximal pairs differ in number");
    std::vector<SpecEntry> out;
    for (const auto& p : primes) {
        auto it = std::find_if(maxes.begin(), maxes.end(), [&](const HomPair& m) { return m.ideal.members == p.members; });
        if (it == maxes.end() || !(it->mset.members == p.members.complement())) {
            throw Error(ErrorCode::Internal, "prime ideal without matching maximal pair (P, R \\ P)");
        }
        out.push_back(SpecEntry{p, *it});
    }
    return out;
}

HomPair pull_back(const RingMorphism& f, const HomPair& pair) {
    if (pair.ring() != f.target()) throw Error(ErrorCode::RingMismatch, "pair does not live on the morphism's target");
    HomPair out{Ideal{f.source(), f.preimage(pair.ideal.members)},
                MultiplicativeSet{f.source(), f.preimage(pair.mset.members)}};
    if (!validate_pair(f.source(), out.ideal.members, out.mset.members).ok()) {
        throw Error(ErrorCode::Internal, "pulled-back pair fails validation");
    }
    return out;
}

bool HomMap::is_order_preserving() const {
    for (std::size_t i = 0; i < domain.size(); ++i) {
        for (std::size_t j = 0; j < domain.size(); ++j) {
            if (domain.leq(i, j) && !codomain.leq(image[i], image[j])) return false;
        }
    }
    return true;
}

HomMap hom_functor(const RingMorphism& f) {
    HomMap map{hom_poset(f.target()), hom_poset(f.source()), {}};
    for (const auto& pair : map.domain.pairs()) {
        auto idx = map.codomain.index_of(pull_back(f, pair));
        if (!idx) throw Error(ErrorCode::Internal, "pulled-back pair missing from Hom of the source");
        map.image.push_back(*idx);
    }
    return map;
}

bool satisfies_local_fiber_criterion(const RingMorphism& f) {
    const auto pair = pair_of_morphism(f);
    if (!pair.ideal.members.is_subset_of(jacobson_radical(f.source()).members)) return false;
    return least_of_fiber(f.source(), pair.ideal) == pair;
}

bool is_local_morphism(const RingMorphism& f) {
    const bool local = f.preimage(units(f.target()).members) == units(f.source()).members;
    if (local != satisfies_local_fiber_criterion(f)) {
        throw Error(ErrorCode::Internal, "local-morphism tests disagree");
    }
    return local;
}

ProductPosetIso product_decompose_poset(const RingPtr& left, const RingPtr& right, const Limits& limits) {
    const auto prod = make_product(left, right, limits);
    ProductPosetIso iso{hom_poset(prod, true), hom_poset(left, true), hom_poset(right, true), {}, false, false};

    auto locate = [](const HomPoset& bar, const CornerRing& corner, const RingMorphism& restricted) {
        if (corner.ring->is_zero_ring()) return bar.top();
        auto idx = bar.index_of(pair_of_morphism(restricted));
        if (!idx) throw Error(ErrorCode::Internal, "restricted pair missing from factor poset");
        return *idx;
    };

    for (std::size_t i = 0; i < iso.product.size(); ++i) {
        if (iso.product.is_top(i)) {
            iso.image.emplace_back(iso.left.top(), iso.right.top());
            continue;
        }
        const auto q = make_quotient(prod, iso.product.pairs()[i].ideal);
        const auto triple = decompose_product_morphism(q.projection);
        iso.image.emplace_back(locate(iso.left, triple.left_corner, triple.left),
                               locate(iso.right, triple.right_corner, triple.right));
    }

    std::set<std::pair<std::size_t, std::size_t>> distinct(iso.image.begin(), iso.image.end());
    iso.bijective = distinct.size() == iso.image.size() && distinct.size() == iso.left.size() * iso.right.size();
    iso.order_isomorphism = iso.bijective;
    for (std::size_t i = 0; i < iso.product.size() && iso.order_isomorphism; ++i) {
        for (std::size_t j = 0; j < iso.product.size(); ++j) {
            const bool componentwise = iso.left.leq(iso.image[i].first, iso.image[j].first) &&
                                       iso.right.leq(iso.image[i].second, iso.image[j].second);
            if (iso.product.leq(i, j) != componentwise) {
                iso.order_isomorphism = false;
                break;
            }
        }
    }
    return iso;
}

namespace {

bool contains_pair(const std::vector<HomPair>& v, const HomPair& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

void sort_pairs(std::vector<HomPair>& v) {
    std::sort(v.begin(), v.end(), [](const HomPair& a, const HomPair& b) { return canonical_less(a, b); });
}

}  // namespace

DivCprMax div_cpr_max(const RingPtr& ring, std::size_t field_bound, const Limits& limits) {
    DivCprMax out;
    const std::size_t bound = std::min(field_bound, limits.search_cap);
    for (std::uint32_t p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t q = p;
        for (std::uint32_t k = 1; q <= bound; ++k, q *= p) {
            const auto field = make_finite_field(p, k, limits);
            for (const auto& f : enumerate_morphisms(ring, field, limits)) {
                const auto ker = f.kernel();
                HomPair pair{ker, MultiplicativeSet{ring, ker.members.complement()}};
                if (!contains_pair(out.div, pair)) out.div.push_back(std::move(pair));
            }
        }
    }
    sort_pairs(out.div);

    const auto poset = hom_poset(ring);
    for (const auto& ideal : enumerate_ideals(ring)) {
        if (!is_completely_prime(ideal)) continue;
        HomPair pair{ideal, MultiplicativeSet{ring, ideal.members.complement()}};
        if (poset.index_of(pair)) out.cpr.push_back(std::move(pair));
    }
    out.max = max_elements(poset);

    out.chain_holds = std::all_of(out.div.begin(), out.div.end(), [&](const HomPair& p) { return contains_pair(out.cpr, p); }) &&
                      std::all_of(out.cpr.begin(), out.cpr.end(), [&](const HomPair& p) { return contains_pair(out.max, p); });
    return out;
}

DirectLimitReport verify_direct_limit(const std::vector<RingPtr>& rings, const std::vector<RingMorphism>& maps) {
    const auto limit = direct_limit_chain(rings, maps);
    std::vector<HomPoset> posets;
    for (const auto& r : rings) posets.push_back(hom_poset(r));
    const HomPoset& colimit = posets.back();

    // pulled[i][x] = index in Hom(R_i) of the pull-back of x in Hom(R_{i+1}).
    std::vector<std::vector<std::size_t>> pulled(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) {
        for (const auto& pair : posets[i + 1].pairs()) {
            auto idx = posets[i].index_of(pull_back(maps[i], pair));
            if (!idx) throw Error(ErrorCode::Internal, "pull-back missing along the chain");
            pulled[i].push_back(*idx);
        }
    }

    DirectLimitReport report;
    report.colimit_size = colimit.size();

    // Compatible tuples by depth-first extension from position 0.
    std::vector<std::size_t> partial;
    auto extend = [&](auto&& self) -> void {
        const std::size_t pos = partial.size();
        if (pos == rings.size()) {
            report.tuples.push_back(partial);
            return;
        }
        for (std::size_t x = 0; x < posets[pos].size(); ++x) {
            if (pos > 0 && pulled[pos - 1][x] != partial[pos - 1]) continue;
            partial.push_back(x);
            self(self);
            partial.pop_back();
        }
    };
    extend(extend);
    report.inverse_limit_size = report.tuples.size();

    for (const auto& pair : colimit.pairs()) {
        std::vector<std::size_t> tuple;
        for (std::size_t i = 0; i < rings.size(); ++i) {
            auto idx = posets[i].index_of(pull_back(limit.canonical[i], pair));
            if (!idx) throw Error(ErrorCode::Internal, "canonical pull-back missing");
            tuple.push_back(*idx);
        }
        auto it = std::find(report.tuples.begin(), report.tuples.end(), tuple);
        report.image.push_back(it == report.tuples.end() ? report.tuples.size()
                                                        : static_cast<std::size_t>(it - report.tuples.begin()));
    }

    std::set<std::size_t> hit(report.image.begin(), report.image.end());
    report.bijective = !hit.count(report.tuples.size()) && hit.size() == report.image.size() &&
                       hit.size() == report.tuples.size();
    if (!report.bijective) return report;

    auto tuple_leq = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rings.size(); ++i) {
            if (!posets[i].leq(report.tuples[a][i], report.tuples[b][i])) return false;
        }
        return true;
    };
    report.preserves_order = true;
    report.reflects_order = true;
    for (std::size_t x = 0; x < colimit.size(); ++x) {
        for (std::size_t y = 0; y < colimit.size(); ++y) {
            const bool lhs = colimit.leq(x, y);
            const bool rhs = tuple_leq(report.image[x], report.image[y]);
            if (lhs && !rhs) report.preserves_order = false;
            if (rhs && !lhs) report.reflects_order = false;
        }
    }
    return report;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse(const HomPoset& poset) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    const std::size_t n = poset.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !poset.leq(i, j)) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n && covered; ++k) {
                if (k != i && k != j && poset.leq(i, k) && poset.leq(k, j)) covered = false;
            }
            if (covered) edges.emplace_back(i, j);
        }
    }
    return edges;
}

}  // namespace homposet
