#include "homposet/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "homposet/epimorphism.hpp"
#include "homposet/hom_z.hpp"
#include "homposet/localization.hpp"
#include "homposet/product.hpp"
#include "homposet/search.hpp"
#include "homposet/structure.hpp"

namespace homposet::oracle {

// ---------------------------------------------------------------------------
// Catalog

namespace {

bool add_unique(std::vector<RingPtr>& rings, RingPtr ring) {
    for (const auto& r : rings) {
        if (r->same_tables(*ring)) return false;
    }
    rings.push_back(std::move(ring));
    return true;
}

}  // namespace

Catalog Catalog::generate(std::size_t bound, const Limits& limits) {
    Catalog c;
    c.bound_ = bound;
    Limits lim = limits;
    lim.table_cap = std::max(lim.table_cap, bound);
    if (bound < 2) return c;
    auto& rings = c.rings_;

    for (std::uint32_t n = 2; n <= bound; ++n) add_unique(rings, make_zmod(n, lim));
    for (std::uint32_t p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t q = std::uint64_t{p} * p;
        for (std::uint32_t k = 2; q <= bound; ++k, q *= p) add_unique(rings, make_finite_field(p, k, lim));
    }
    // Binary products, repeated until no new ring of admissible order appears.
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t count = rings.size();
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < count; ++j) {
                if (rings[i]->size() * rings[j]->size() > bound) continue;
                if (add_unique(rings, make_product(rings[i], rings[j], lim))) grew = true;
            }
        }
    }
    if (bound >= 16) add_unique(rings, make_matrix_ring(make_finite_field(2, 1, lim), 2, lim));
    // Quotients, including quotients of quotients.
    for (std::size_t i = 0; i < rings.size(); ++i) {
        const auto ring = rings[i];
        for (const auto& ideal : enumerate_ideals(ring)) {
            if (!ideal.is_proper() || ideal.members.count() == 1) continue;
            add_unique(rings, make_quotient(ring, ideal).ring);
        }
    }
    return c;
}

std::optional<std::size_t> Catalog::find(const FiniteRing& ring) const {
    for (std::size_t i = 0; i < rings_.size(); ++i) {
        if (rings_[i]->same_tables(ring)) return i;
    }
    return std::nullopt;
}

namespace {

void sort_unique_pairs(std::vector<HomPair>& pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const HomPair& a, const HomPair& b) { return canonical_less(a, b); });
    pairs.erase(std::unique(pairs.begin(), pairs.end(),
                            [](const HomPair& a, const HomPair& b) {
                                return a.ideal.members == b.ideal.members && a.mset.members == b.mset.members;
                            }),
                pairs.end());
}

bool same_pair_sets(const std::vector<HomPair>& a, const std::vector<HomPair>& b) {
    auto has = [](const std::vector<HomPair>& v, const HomPair& p) {
        return std::any_of(v.begin(), v.end(), [&](const HomPair& q) {
            return q.ideal.members == p.ideal.members && q.mset.members == p.mset.members;
        });
    };
    return std::all_of(a.begin(), a.end(), [&](const HomPair& p) { return has(b, p); });
}

std::string show_set(const ElementSet& s) {
    std::ostringstream out;
    out << "{";
    const auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
    out << "}";
    return out.str();
}

std::string show_pair(const HomPair& p) {
    return p.ring()->describe() + " (" + show_set(p.ideal.members) + ", " + show_set(p.mset.members) + ")";
}

std::string show_morphism(const RingMorphism& f) {
    std::ostringstream out;
    out << f.source()->describe() << " -> " << f.target()->describe() << " [";
    for (std::size_t i = 0; i < f.images().size(); ++i) out << (i ? "," : "") << f.images()[i];
    out << "]";
    return out.str();
}

}  // namespace

std::vector<HomPair> realized_pairs(const RingPtr& ring, const Catalog& catalog, const Limits& limits) {
    std::vector<HomPair> pairs;
    for (const auto& target : catalog.rings()) {
        for (const auto& f : enumerate_morphisms(ring, target, limits)) pairs.push_back(pair_of_morphism(f));
    }
    sort_unique_pairs(pairs);
    return pairs;
}

ConstructionReport verify_hom_construction(const RingPtr& ring, const Catalog& catalog, const Limits& limits) {
    ConstructionReport report;
    report.realized = realized_pairs(ring, catalog, limits);
    report.constructed = hom_poset(ring).pairs();
    report.sound = same_pair_sets(report.realized, report.constructed);
    report.complete = same_pair_sets(report.constructed, report.realized);
    return report;
}

// ---------------------------------------------------------------------------
// Report

bool Report::all_passed() const {
    return !degenerate && std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed(); });
}

const ClaimResult* Report::find(const std::string& id) const {
    for (const auto& c : claims) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

std::string Report::to_json() const {
    nlohmann::ordered_json doc;
    doc["bound"] = bound;
    doc["rings"] = ring_count;
    doc["degenerate"] = degenerate;
    doc["passed"] = all_passed();
    doc["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : claims) {
        nlohmann::ordered_json entry;
        entry["id"] = c.id;
        entry["statement"] = c.statement;
        entry["checks"] = c.checks;
        entry["failures"] = c.failures;
        entry["passed"] = c.passed();
        entry["witnesses"] = c.witnesses;
        doc["claims"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "catalog bound " << bound << ": " << ring_count << " rings";
    if (degenerate) out << " (degenerate: nothing to check)";
    out << "\n";
    for (const auto& c : claims) {
        out << (c.passed() ? "PASS " : "FAIL ") << c.id << "  checks=" << c.checks << " failures=" << c.failures << "  "
            << c.statement << "\n";
        for (const auto& w : c.witnesses) out << "    witness: " << w << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Theorem battery

namespace {

struct ClaimSpec {
    const char* id;
    const char* statement;
};

const std::vector<ClaimSpec>& claim_specs() {
    static const std::vector<ClaimSpec> specs = {
        {"ring-invariants", "ring axioms, provenance regeneration, regular = units, direct finiteness, saturated units, ideal lattice closure, morphisms send units to units with proper kernels"},
        {"hom-construction", "realized pairs over the catalog equal the ideal-built Hom(R)"},
        {"pair-invariants", "every realized pair is a submonoid containing U(R), stable under a and J(R), disjoint from a, regular modulo a"},
        {"non-cancellative-witness", "in Z/6 -> Z/2, x = 1 and y = z = 3 lie in M with xz = yz and x != y"},
        {"sigma-implies-rho", "if psi f = f' then pair(f) <= pair(f')"},
        {"meet-is-product-pair", "the pair of the product morphism is the componentwise intersection, and it is the meet"},
        {"functor-laws", "Hom(f) is order preserving, Hom(id) = id, Hom(g f) = Hom(f) Hom(g)"},
        {"product-triples", "morphisms out of R1 x R2 decompose into (e, psi1, psi2) and rebuild exactly"},
        {"product-poset-bijection", "Hom-bar(R1 x R2) is order isomorphic to Hom-bar(R1) x Hom-bar(R2)"},
        {"completely-prime-maximal", "completely prime pairs (P, R \\ P) in Hom(R) are maximal"},
        {"maximal-nonempty", "Hom(R) has maximal elements"},
        {"spectrum", "commutative R: maximal pairs are (P, R \\ P) for prime P; greatest element iff a unique prime"},
        {"div-cpr-max", "Div(R) inside Cpr(R) inside Max(R), all equal for commutative R"},
        {"bounded-lattice", "Hom-bar(R) satisfies the bounded lattice axioms"},
        {"universal-inverting", "R/a with the projection has kernel a, unit preimage M, and unique factorization of every admissible morphism"},
        {"canonical-factorization", "every morphism factors as embedding . surjective epimorphism . universal map . projection, and the corestriction is an epimorphism with the same pair"},
        {"epi-criterion", "surjections are epimorphisms; proper prime-field embeddings are not (F_2 -> F_4 has tensor group of order 4)"},
        {"least-of-fiber", "the projection pair is the least element of its fiber"},
        {"local-morphisms", "f^-1(U(S)) = U(R) iff ker f lies in J(R) and pair(f) is least in its fiber"},
        {"direct-limit", "Hom of the colimit of a finite chain is the inverse limit of the Hom posets"},
        {"fraction-connecting-maps", "for rings of fractions of one ring, comparable pairs admit a connecting morphism"},
        {"denominator-sets", "commutative submonoids are left Ore; ass(T) is an ideal for left denominator sets"},
        {"integers", "Hom(Z/n) matches the modular elements of Hom(Z) above nZ; rho reverses the order"},
    };
    return specs;
}

class Claim {
public:
    Claim(const ClaimSpec& spec) { result_.id = spec.id; result_.statement = spec.statement; }

    template <typename Witness>
    void check(bool ok, Witness&& witness) {
        ++result_.checks;
        if (!ok) {
            ++result_.failures;
            if (result_.witnesses.size() < 5) result_.witnesses.push_back(witness());
        }
    }

    /// Runs body; an escaping library error counts as one failed check.
    void guarded(const std::string& where, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, [&] { return where + ": " + e.what(); });
        }
    }

    ClaimResult take() { return std::move(result_); }

private:
    ClaimResult result_;
};

struct Context {
    const Catalog& catalog;
    Limits limits;
    std::map<const FiniteRing*, std::size_t> index;
    std::vector<HomPoset> posets;
    // homs[i][j]: all morphisms catalog[i] -> catalog[j].
    std::vector<std::vector<std::vector<RingMorphism>>> homs;
    std::vector<std::vector<HomPair>> realized;

    const std::vector<RingPtr>& rings() const { return catalog.rings(); }

    std::optional<std::size_t> ring_index(const RingPtr& r) const {
        auto it = index.find(r.get());
        if (it == index.end()) return std::nullopt;
        return it->second;
    }

    std::optional<RingPtr> by_description(const std::string& d) const {
        for (const auto& r : rings()) {
            if (r->describe() == d) return r;
        }
        return std::nullopt;
    }

    // Index map Hom(target) -> Hom(source) of a morphism between catalog rings.
    std::vector<std::size_t> pullback_map(const RingMorphism& f) const {
        const auto& dom = posets[*ring_index(f.target())];
        const auto& cod = posets[*ring_index(f.source())];
        std::vector<std::size_t> out;
        for (const auto& pair : dom.pairs()) {
            auto idx = cod.index_of(pull_back(f, pair));
            out.push_back(idx ? *idx : cod.size());
        }
        return out;
    }
};

using Runner = std::function<void(Context&, Claim&)>;

void run_ring_invariants(Context& ctx, Claim& claim) {
    for (const auto& R : ctx.rings()) {
        const auto name = R->describe();
        claim.check(!find_axiom_violation(*R), [&] { return name + ": ring axiom violated"; });
        claim.check(regenerate(*R, ctx.limits)->same_tables(*R), [&] { return name + ": provenance does not regenerate tables"; });
        const auto u = units(R);
        claim.check(regular_elements(R).members == u.members, [&] { return name + ": regular elements differ from units"; });
        claim.check(is_directly_finite(R), [&] { return name + ": not directly finite"; });
        claim.check(is_saturated(R, u.members), [&] { return name + ": units not saturated"; });
        const auto ideals = enumerate_ideals(R);
        for (const auto& a : ideals) {
            for (const auto& b : ideals) {
                const auto s = ideal_sum(a, b);
                const auto t = ideal_intersection(a, b);
                const bool closed =
                    std::any_of(ideals.begin(), ideals.end(), [&](const Ideal& i) { return i.members == s.members; }) &&
                    std::any_of(ideals.begin(), ideals.end(), [&](const Ideal& i) { return i.members == t.members; });
                claim.check(closed, [&] { return name + ": ideal list not closed under sum/intersection"; });
            }
        }
    }
    for (std::size_t i = 0; i < ctx.rings().size(); ++i) {
        for (std::size_t j = 0; j < ctx.rings().size(); ++j) {
            const auto tu = units(ctx.rings()[j]).members;
            for (const auto& f : ctx.homs[i][j]) {
                const auto su = units(ctx.rings()[i]).members.members();
                bool ok = std::all_of(su.begin(), su.end(), [&](Elem x) { return tu.contains(f(x)); });
                const auto ker = f.kernel();
                ok = ok && ker.is_proper() && is_ideal(*f.source(), ker.members);
                claim.check(ok, [&] { return show_morphism(f) + ": units or kernel invariant fails"; });
            }
        }
    }
}

void run_hom_construction(Context& ctx, Claim& claim) {
    for (std::size_t i = 0; i < ctx.rings().size(); ++i) {
        const auto& constructed = ctx.posets[i].pairs();
        const auto& realized = ctx.realized[i];
        claim.check(same_pair_sets(realized, constructed),
                    [&] { return ctx.rings()[i]->describe() + ": a realized pair is missing from Hom(R)"; });
        claim.check(same_pair_sets(constructed, realized),
                    [&] { return ctx.rings()[i]->describe() + ": a constructed pair is not realized"; });
    }
}

void run_pair_invariants(Context& ctx, Claim& claim, bool inject) {
    auto check_pair = [&](const HomPair& p) {
        const auto v = validate_pair(p.ring(), p.ideal.members, p.mset.members);
        const std::string where = show_pair(p);
        auto why = [&](const char* clause) {
            return [&, clause] {
                return where + " [" + clause + "]: " + (v.witnesses.empty() ? std::string("?") : v.witnesses.front());
            };
        };
        claim.check(v.submonoid, why("submonoid"));
        claim.check(v.contains_units, why("units"));
        claim.check(v.stable_and_disjoint, why("stable and disjoint"));
        claim.check(v.regular_modulo_ideal, why("regular modulo a"));
    };
    for (const auto& pairs : ctx.realized) {
        for (const auto& p : pairs) check_pair(p);
    }
    if (inject && !ctx.realized.empty() && !ctx.realized.front().empty()) {
        auto bad = ctx.realized.front().front();
        bad.mset.members.insert(bad.ring()->zero());
        check_pair(bad);
    }
}

void run_non_cancellative(Context& ctx, Claim& claim) {
    auto z6 = ctx.by_description("zmod:6");
    auto z2 = ctx.by_description("zmod:2");
    if (!z6 || !z2) return;
    for (const auto& f : ctx.homs[*ctx.ring_index(*z6)][*ctx.ring_index(*z2)]) {
        const auto p = pair_of_morphism(f);
        const Elem x = 1, y = 3, z = 3;
        const auto& R = **z6;
        const bool witness = p.mset.contains(x) && p.mset.contains(y) && p.mset.contains(z) && R.mul(x, z) == R.mul(y, z) &&
                             x != y;
        claim.check(witness, [&] { return show_pair(p) + ": witness x=1, y=z=3 does not reproduce"; });
    }
}

void run_sigma_rho(Context& ctx, Claim& claim) {
    const std::size_t n = ctx.rings().size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (const auto& f : ctx.homs[a][b]) {
                const auto pf = pair_of_morphism(f);
                for (std::size_t c = 0; c < n; ++c) {
                    for (const auto& psi : ctx.homs[b][c]) {
                        const auto g = compose(psi, f);
                        claim.check(leq(pf, pair_of_morphism(g)),
                                    [&] { return show_morphism(f) + " then " + show_morphism(psi) + ": pair order fails"; });
                    }
                }
            }
        }
    }
}

void run_meet_product(Context& ctx, Claim& claim) {
    for (std::size_t r = 0; r < ctx.rings().size(); ++r) {
        const auto& R = ctx.rings()[r];
        const auto& poset = ctx.posets[r];
        std::vector<Quotient> quotients;
        for (const auto& p : poset.pairs()) quotients.push_back(make_quotient(R, p.ideal));
        for (std::size_t i = 0; i < poset.pairs().size(); ++i) {
            for (std::size_t j = 0; j < poset.pairs().size(); ++j) {
                const auto& qa = quotients[i];
                const auto& qb = quotients[j];
                if (qa.ring->size() * qb.ring->size() > ctx.limits.table_cap) continue;
                claim.guarded(R->describe(), [&] {
                    const auto prod = make_product(qa.ring, qb.ring, ctx.limits);
                    const auto nb = static_cast<Elem>(qb.ring->size());
                    std::vector<Elem> images(R->size());
                    for (Elem x = 0; x < R->size(); ++x) images[x] = qa.projection(x) * nb + qb.projection(x);
                    const auto f = RingMorphism::checked(R, prod, std::move(images));
                    const auto m = meet(poset.pairs()[i], poset.pairs()[j]);
                    claim.check(pair_of_morphism(f) == m, [&] { return show_pair(m) + ": product morphism pair differs"; });
                    const auto idx = poset.meet(i, j);
                    claim.check(idx && poset.pairs()[*idx] == m, [&] { return show_pair(m) + ": not the greatest lower bound"; });
                });
            }
        }
    }
}

void run_functor_laws(Context& ctx, Claim& claim) {
    const std::size_t n = ctx.rings().size();
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> maps;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            auto& list = maps[{a, b}];
            for (const auto& f : ctx.homs[a][b]) {
                claim.guarded(show_morphism(f), [&] {
                    auto m = ctx.pullback_map(f);
                    const auto& dom = ctx.posets[b];
                    const auto& cod = ctx.posets[a];
                    bool ok = std::none_of(m.begin(), m.end(), [&](std::size_t x) { return x >= cod.size(); });
                    for (std::size_t x = 0; ok && x < dom.size(); ++x) {
                        for (std::size_t y = 0; y < dom.size(); ++y) {
                            if (dom.leq(x, y) && !cod.leq(m[x], m[y])) ok = false;
                        }
                    }
                    claim.check(ok, [&] { return show_morphism(f) + ": Hom(f) not an order map into Hom(R)"; });
                    list.push_back(std::move(m));
                });
            }
        }
        const auto id = ctx.pullback_map(RingMorphism::identity(ctx.rings()[a]));
        bool ok = true;
        for (std::size_t x = 0; x < id.size(); ++x) ok = ok && id[x] == x;
        claim.check(ok, [&] { return ctx.rings()[a]->describe() + ": Hom(id) is not the identity"; });
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const auto& fs = ctx.homs[a][b];
            if (maps[{a, b}].size() != fs.size()) continue;
            for (std::size_t fi = 0; fi < fs.size(); ++fi) {
                for (std::size_t c = 0; c < n; ++c) {
                    const auto& gs = ctx.homs[b][c];
                    if (maps[{b, c}].size() != gs.size()) continue;
                    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                        const auto composite = ctx.pullback_map(compose(gs[gi], fs[fi]));
                        const auto& mf = maps[{a, b}][fi];
                        const auto& mg = maps[{b, c}][gi];
                        bool ok = true;
                        for (std::size_t x = 0; x < composite.size(); ++x) ok = ok && composite[x] == mf[mg[x]];
                        claim.check(ok, [&] { return show_morphism(fs[fi]) + " then " + show_morphism(gs[gi]) + ": composition law fails"; });
                    }
                }
            }
        }
    }
}

void run_product_triples(Context& ctx, Claim& claim) {
    for (std::size_t i = 0; i < ctx.rings().size(); ++i) {
        if (!std::holds_alternative<provenance::Product>(ctx.rings()[i]->provenance())) continue;
        for (std::size_t j = 0; j < ctx.rings().size(); ++j) {
            for (const auto& f : ctx.homs[i][j]) {
                claim.guarded(show_morphism(f), [&] {
                    const auto t = decompose_product_morphism(f);
                    const auto& S = *f.target();
                    claim.check(S.mul(t.idempotent, t.idempotent) == t.idempotent,
                                [&] { return show_morphism(f) + ": e is not idempotent"; });
                    claim.check(rebuild_product_morphism(t) == f, [&] { return show_morphism(f) + ": rebuild differs"; });
                });
            }
        }
    }
}

void run_product_poset(Context& ctx, Claim& claim) {
    for (const auto& R : ctx.rings()) {
        const auto* prod = std::get_if<provenance::Product>(&R->provenance());
        if (prod == nullptr) continue;
        claim.guarded(R->describe(), [&] {
            const auto iso = product_decompose_poset(prod->left, prod->right, ctx.limits);
            claim.check(iso.bijective, [&] { return R->describe() + ": restriction map not bijective"; });
            claim.check(iso.order_isomorphism, [&] { return R->describe() + ": restriction map not an order isomorphism"; });
            claim.check(iso.product.size() == iso.left.size() * iso.right.size(),
                        [&] { return R->describe() + ": |Hom-bar| not multiplicative"; });
        });
    }
}

void run_completely_prime_maximal(Context& ctx, Claim& claim) {
    for (std::size_t i = 0; i < ctx.rings().size(); ++i) {
        const auto& R = ctx.rings()[i];
        const auto& poset = ctx.posets[i];
        const auto maxes = poset.maximal();
        for (const auto& ideal : enumerate_ideals(R)) {
            if (!is_completely_prime(ideal)) continue;
            const auto idx = poset.index_of(HomPair{ideal, MultiplicativeSet{R, ideal.members.complement()}});
            if (!idx) continue;
            claim.check(std::find(maxes.begin(), maxes.end(), *idx) != maxes.end(),
                        [&] { return R->describe() + ": completely prime pair " + show_set(ideal.members) + " not maximal"; });
        }
    }
}

void run_maximal_nonempty(Context& ctx, Claim& claim) {
    for (std::size_t i = 0; i < ctx.rings().size(); ++i) {
        claim.check(!ctx.posets[i].maximal().empty(), [&] { return ctx.rings()[i]->describe() + ": no maximal element"; });
    }
}

void run_spectrum(Context& ctx, Claim& claim) {
    for (std::size_t i = 0; i < ctx.rings().size(); ++i) {
        const auto& R = ctx.rings()[i];
        if (!R->is_commutative()) continue;
        claim.guarded(R->describe(), [&] {
            const auto spec = spec_correspondence(R);
            claim.check(spec.size() == ctx.posets[i].maximal().size(),
                        [&] { return R->describe() + ": primes and maximal pairs differ"; });
            const bool greatest = ctx.posets[i].greatest().has_value();
            claim.check(greatest == (spec.size() == 1),
                        [&] { return R->describe() + ": greatest element does not track a unique prime"; });
        });
    }
}

void run_div_cpr_max(Context& ctx, Claim& claim) {
    for (const auto& R : ctx.rings()) {
        claim.guarded(R->describe(), [&] {
            const auto report = div_cpr_max(R, R->size() * R->size(), ctx.limits);
            claim.check(report.chain_holds, [&] { return R->describe() + ": Div, Cpr, Max chain broken"; });
            if (R->is_commutative()) {
                claim.check(report.div == report.cpr && report.cpr == report.max,
                            [&] { return R->describe() + ": Div, Cpr, Max differ on a commutative ring"; });
            }
        });
    }
}

void run_bounded_lattice(Context& ctx, Claim& claim) {
    for (std::size_t r = 0; r < ctx.rings().size(); ++r) {
        const auto& R = ctx.rings()[r];
        const HomPoset bar(R, ctx.posets[r].pairs(), true);
        const std::size_t n = bar.size();
        const auto name = R->describe();
        claim.check(bar.least() == bar.index_of(HomPair{Ideal::zero(R), units(R)}).value_or(n),
                    [&] { return name + ": least element is not (0, U(R))"; });
        claim.check(bar.greatest() == bar.top(), [&] { return name + ": top is not greatest"; });
        std::vector<std::vector<std::size_t>> mt(n, std::vector<std::size_t>(n)), jn(n, std::vector<std::size_t>(n));
        bool total = true;
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                auto m = bar.meet(x, y);
                auto j = bar.join(x, y);
                claim.check(m && j, [&] { return name + ": missing meet or join"; });
                if (!m || !j) {
                    total = false;
                    continue;
                }
                mt[x][y] = *m;
                jn[x][y] = *j;
            }
        }
        if (!total) continue;
        for (std::size_t x = 0; x < n; ++x) {
            claim.check(mt[x][x] == x && jn[x][x] == x, [&] { return name + ": idempotence fails"; });
            claim.check(mt[x][bar.top()] == x && jn[x][bar.least()] == x, [&] { return name + ": bounds fail"; });
            for (std::size_t y = 0; y < n; ++y) {
                claim.check(mt[x][y] == mt[y][x] && jn[x][y] == jn[y][x], [&] { return name + ": commutativity fails"; });
                claim.check(mt[x][jn[x][y]] == x && jn[x][mt[x][y]] == x, [&] { return name + ": absorption fails"; });
                for (std::size_t z = 0; z < n; ++z) {
                    claim.check(mt[mt[x][y]][z] == mt[x][mt[y][z]] && jn[jn[x][y]][z] == jn[x][jn[y][z]],
                                [&] { return name + ": associativity fails"; });
                }
            }
        }
    }
}

void run_universal_inverting(Context& ctx, Claim& claim) {
    for (std::size_t r = 0; r < ctx.rings().size(); ++r) {
        const auto& R = ctx.rings()[r];
        for (const auto& pair : ctx.posets[r].pairs()) {
            claim.guarded(show_pair(pair), [&] {
                const auto loc = universal_inverting_finite(R, pair);
                claim.check(true, [] { return std::string(); });
                if (pair.ideal.members.count() == 1) {
                    claim.check(loc.canonical.is_injective(), [&] { return show_pair(pair) + ": zero-kernel map not injective"; });
                }
                ElementSet induced(loc.ring->size());
                for (Elem m : pair.mset.members.members()) induced.insert(loc.canonical(m));
                claim.check(validate_pair(loc.ring, ElementSet(loc.ring->size(), {loc.ring->zero()}), induced).ok(),
                            [&] { return show_pair(pair) + ": induced pair on R/a fails validation"; });

                for (std::size_t s = 0; s < ctx.rings().size(); ++s) {
                    for (const auto& f : ctx.homs[r][s]) {
                        const auto fp = pair_of_morphism(f);
                        const bool admissible = pair.ideal.members.is_subset_of(fp.ideal.members) &&
                                                pair.mset.members.is_subset_of(fp.mset.members);
                        if (admissible) {
                            claim.guarded(show_morphism(f), [&] {
                                const auto g = factor_through(loc.canonical, f, ctx.limits);
                                claim.check(compose(g, loc.canonical) == f, [&] { return show_morphism(f) + ": g psi != f"; });
                            });
                        } else {
                            bool refused = false;
                            try {
                                factor_through(loc.canonical, f, ctx.limits);
                            } catch (const Error& e) {
                                refused = e.code() == ErrorCode::NoFactorization;
                            }
                            claim.check(refused, [&] { return show_morphism(f) + ": inadmissible morphism not refused"; });
                        }
                    }
                }
            });
        }
    }
}

void run_canonical_factorization(Context& ctx, Claim& claim) {
    for (std::size_t i = 0; i < ctx.rings().size(); ++i) {
        for (std::size_t j = 0; j < ctx.rings().size(); ++j) {
            for (const auto& f : ctx.homs[i][j]) {
                claim.guarded(show_morphism(f), [&] {
                    const auto fac = canonical_factorization(f);
                    claim.check(fac.valid(), [&] { return show_morphism(f) + ": factorization stage property fails"; });
                    const auto cor = epimorphic_corestriction(f);
                    claim.check(cor.is_epi && cor.pair_preserved, [&] { return show_morphism(f) + ": corestriction fails"; });
                });
            }
        }
    }
}

void run_epi_criterion(Context& ctx, Claim& claim) {
    for (std::size_t i = 0; i < ctx.rings().size(); ++i) {
        for (std::size_t j = 0; j < ctx.rings().size(); ++j) {
            for (const auto& f : ctx.homs[i][j]) {
                if (f.is_surjective()) {
                    claim.check(is_ring_epimorphism(f), [&] { return show_morphism(f) + ": surjection not certified epi"; });
                }
                const auto* src = std::get_if<provenance::ZMod>(&f.source()->provenance());
                const auto* tgt = std::get_if<provenance::Field>(&f.target()->provenance());
                if (src && tgt && is_prime(src->n) && tgt->k > 1) {
                    claim.check(!is_ring_epimorphism(f), [&] { return show_morphism(f) + ": field embedding reported epi"; });
                }
            }
        }
    }
    auto f2 = ctx.by_description("zmod:2");
    auto f4 = ctx.by_description("gf:2:2");
    if (f2 && f4) {
        for (const auto& f : ctx.homs[*ctx.ring_index(*f2)][*ctx.ring_index(*f4)]) {
            const auto group = tensor_cokernel(f);
            claim.check(group.is_finite() && group.order() == 4,
                        [&] { return show_morphism(f) + ": tensor group " + group.describe() + " instead of order 4"; });
        }
    }
}

void run_least_of_fiber(Context& ctx, Claim& claim) {
    for (std::size_t r = 0; r < ctx.rings().size(); ++r) {
        const auto& R = ctx.rings()[r];
        for (const auto& p : ctx.realized[r]) {
            const auto least = least_of_fiber(R, p.ideal);
            claim.check(leq(least, p), [&] { return show_pair(p) + ": projection pair not below it"; });
            const bool realized = std::any_of(ctx.realized[r].begin(), ctx.realized[r].end(),
                                              [&](const HomPair& q) { return q == least; });
            claim.check(realized, [&] { return show_pair(least) + ": projection pair not realized"; });
        }
    }
}

void run_local(Context& ctx, Claim& claim) {
    for (std::size_t i = 0; i < ctx.rings().size(); ++i) {
        for (std::size_t j = 0; j < ctx.rings().size(); ++j) {
            for (const auto& f : ctx.homs[i][j]) {
                const bool direct = f.preimage(units(f.target()).members) == units(f.source()).members;
                claim.check(direct == satisfies_local_fiber_criterion(f),
                            [&] { return show_morphism(f) + ": local-morphism criteria disagree"; });
            }
        }
    }
}

void run_direct_limit(Context& ctx, Claim& claim) {
    auto check_chain = [&](const std::vector<RingPtr>& rings, const std::vector<RingMorphism>& maps, const std::string& where) {
        claim.guarded(where, [&] {
            const auto report = verify_direct_limit(rings, maps);
            claim.check(report.isomorphism(), [&] { return where + ": not an order isomorphism"; });
        });
    };
    for (std::size_t i = 0; i < ctx.rings().size(); ++i) {
        for (std::size_t j = 0; j < ctx.rings().size(); ++j) {
            for (const auto& f : ctx.homs[i][j]) check_chain({f.source(), f.target()}, {f}, show_morphism(f));
        }
    }
    auto f2 = ctx.by_description("zmod:2");
    auto f4 = ctx.by_description("gf:2:2");
    auto f16 = ctx.by_description("gf:2:4");
    if (f2 && f4 && f16) {
        const auto& a = ctx.homs[*ctx.ring_index(*f2)][*ctx.ring_index(*f4)];
        const auto& b = ctx.homs[*ctx.ring_index(*f4)][*ctx.ring_index(*f16)];
        if (!a.empty() && !b.empty()) check_chain({*f2, *f4, *f16}, {a.front(), b.front()}, "F2 -> F4 -> F16");
    }
}

std::vector<ElementSet> candidate_denominator_sets(const RingPtr& R) {
    std::vector<ElementSet> sets;
    const auto u = units(R).members;
    for (Elem t = 0; t < R->size(); ++t) {
        ElementSet s = u;
        s.insert(t);
        for (bool grew = true; grew;) {
            grew = false;
            for (Elem a : s.members()) {
                for (Elem b : s.members()) {
                    if (!s.contains(R->mul(a, b))) {
                        s.insert(R->mul(a, b));
                        grew = true;
                    }
                }
            }
        }
        if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(std::move(s));
    }
    return sets;
}

void run_fraction_maps(Context& ctx, Claim& claim) {
    for (const auto& R : ctx.rings()) {
        std::vector<Quotient> fractions;
        for (const auto& t : candidate_denominator_sets(R)) {
            auto report = denominator_analysis(R, t);
            if (report.fraction_ring) fractions.push_back(std::move(*report.fraction_ring));
        }
        for (const auto& a : fractions) {
            const auto pa = pair_of_morphism(a.projection);
            for (const auto& b : fractions) {
                if (!leq(pa, pair_of_morphism(b.projection))) continue;
                const auto candidates = enumerate_morphisms(a.ring, b.ring, ctx.limits);
                const bool connected = std::any_of(candidates.begin(), candidates.end(), [&](const RingMorphism& psi) {
                    return compose(psi, a.projection) == b.projection;
                });
                claim.check(connected, [&] { return R->describe() + ": comparable fraction rings without connecting map"; });
            }
        }
    }
}

void run_denominator_sets(Context& ctx, Claim& claim) {
    for (const auto& R : ctx.rings()) {
        for (const auto& t : candidate_denominator_sets(R)) {
            claim.guarded(R->describe(), [&] {
                const auto report = denominator_analysis(R, t);
                if (R->is_commutative()) {
                    claim.check(report.is_left_ore, [&] { return R->describe() + ": commutative submonoid not left Ore"; });
                }
                if (report.is_left_denominator) {
                    claim.check(report.ass_is_ideal, [&] { return R->describe() + ": ass(T) not an ideal"; });
                }
            });
        }
    }
}

void run_integers(Context& ctx, Claim& claim) {
    for (std::size_t r = 0; r < ctx.rings().size(); ++r) {
        const auto& R = ctx.rings()[r];
        const auto* zmod = std::get_if<provenance::ZMod>(&R->provenance());
        if (zmod == nullptr) continue;
        const auto& poset = ctx.posets[r];
        std::vector<zhom::Element> elems;
        for (const auto& p : poset.pairs()) {
            // The ideal dZ/nZ is generated by its least positive member d (or n for the zero ideal).
            std::uint64_t d = zmod->n;
            for (Elem x : p.ideal.members.members()) {
                if (x != 0) d = std::gcd(d, std::uint64_t{x});
            }
            elems.push_back(zhom::z_modular(d));
        }
        std::set<std::uint64_t> divisors;
        for (std::uint64_t d = 2; d <= zmod->n; ++d) {
            if (zmod->n % d == 0) divisors.insert(d);
        }
        std::set<std::uint64_t> seen;
        for (const auto& e : elems) seen.insert(e.modulus());
        claim.check(seen == divisors, [&] { return R->describe() + ": ideals do not match divisors of n"; });
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (std::size_t j = 0; j < elems.size(); ++j) {
                claim.check(poset.leq(i, j) == zhom::z_leq(elems[i], elems[j]),
                            [&] { return R->describe() + ": order differs from Hom(Z)"; });
            }
        }
        claim.check(zhom::pair_of_integer_morphism(IntegerMorphism{R}) == zhom::z_modular(zmod->n),
                    [&] { return R->describe() + ": pair of Z -> Z/n is not (nZ, M_div(n))"; });
    }
    // rho on a small grid of modular and zero-kernel elements.
    std::vector<zhom::Element> grid;
    for (std::uint64_t n = 2; n <= 60; ++n) grid.push_back(zhom::z_modular(n));
    grid.push_back(zhom::z_zero_kernel(zhom::PrimeSet::empty()));
    grid.push_back(zhom::z_zero_kernel(zhom::PrimeSet::all()));
    grid.push_back(zhom::z_zero_kernel(zhom::PrimeSet::finite({2, 3})));
    grid.push_back(zhom::z_zero_kernel(zhom::PrimeSet::cofinite({5})));
    for (const auto& x : grid) {
        for (const auto& y : grid) {
            claim.check(zhom::z_leq(x, y) == zhom::rho(y).pointwise_leq(zhom::rho(x)),
                        [&] { return x.to_string() + " vs " + y.to_string() + ": rho not order reversing"; });
        }
    }
}

}  // namespace

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& s : claim_specs()) out.emplace_back(s.id);
        return out;
    }();
    return ids;
}

Report verify_theorems(const Catalog& catalog, const Options& options) {
    Report report;
    report.bound = catalog.bound();
    report.ring_count = catalog.rings().size();
    if (catalog.empty()) {
        report.degenerate = true;
        return report;
    }
    for (const auto& id : options.only) {
        if (std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end()) {
            throw Error(ErrorCode::InvalidArgument, "unknown claim id '" + id + "'");
        }
    }

    Context ctx{catalog, options.limits, {}, {}, {}, {}};
    const std::size_t n = catalog.rings().size();
    for (std::size_t i = 0; i < n; ++i) ctx.index[catalog.rings()[i].get()] = i;
    for (const auto& R : catalog.rings()) ctx.posets.push_back(hom_poset(R));
    ctx.homs.assign(n, std::vector<std::vector<RingMorphism>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) ctx.homs[i][j] = enumerate_morphisms(catalog.rings()[i], catalog.rings()[j], ctx.limits);
    }
    // Realized pairs come from the morphism atlas only.
    ctx.realized.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& f : ctx.homs[i][j]) ctx.realized[i].push_back(pair_of_morphism(f));
        }
        sort_unique_pairs(ctx.realized[i]);
    }

    const std::map<std::string, Runner> runners = {
        {"ring-invariants", run_ring_invariants},
        {"hom-construction", run_hom_construction},
        {"pair-invariants", [&](Context& c, Claim& k) { run_pair_invariants(c, k, options.inject_corrupt_pair); }},
        {"non-cancellative-witness", run_non_cancellative},
        {"sigma-implies-rho", run_sigma_rho},
        {"meet-is-product-pair", run_meet_product},
        {"functor-laws", run_functor_laws},
        {"product-triples", run_product_triples},
        {"product-poset-bijection", run_product_poset},
        {"completely-prime-maximal", run_completely_prime_maximal},
        {"maximal-nonempty", run_maximal_nonempty},
        {"spectrum", run_spectrum},
        {"div-cpr-max", run_div_cpr_max},
        {"bounded-lattice", run_bounded_lattice},
        {"universal-inverting", run_universal_inverting},
        {"canonical-factorization", run_canonical_factorization},
        {"epi-criterion", run_epi_criterion},
        {"least-of-fiber", run_least_of_fiber},
        {"local-morphisms", run_local},
        {"direct-limit", run_direct_limit},
        {"fraction-connecting-maps", run_fraction_maps},
        {"denominator-sets", run_denominator_sets},
        {"integers", run_integers},
    };

    for (const auto& spec : claim_specs()) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), spec.id) == options.only.end()) {
            continue;
        }
        Claim claim(spec);
        claim.guarded(spec.id, [&] { runners.at(spec.id)(ctx, claim); });
        report.claims.push_back(claim.take());
    }
    return report;
}

}  // namespace homposet::oracle
