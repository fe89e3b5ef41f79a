#include "homposet/localization.hpp"

#include <numeric>

#include "homposet/epimorphism.hpp"
#include "homposet/search.hpp"
#include "homposet/structure.hpp"

namespace homposet {

Fraction Fraction::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Fraction{num, den};
}

Fraction Fraction::operator+(const Fraction& o) const { return make(num * o.den + o.num * den, den * o.den); }

Fraction Fraction::operator-(const Fraction& o) const { return make(num * o.den - o.num * den, den * o.den); }

Fraction Fraction::operator*(const Fraction& o) const { return make(num * o.num, den * o.den); }

bool RationalSubring::contains(const Fraction& x) const {
    const auto reduced = Fraction::make(x.num, x.den);
    for (auto p : zhom::factor(static_cast<std::uint64_t>(reduced.den))) {
        if (primes.contains(p)) return false;
    }
    return true;
}

bool RationalSubring::is_unit_image(std::int64_t z) const { return z != 0 && contains(Fraction::make(1, z)); }

RationalSubring localize_integers(zhom::PrimeSet primes) { return RationalSubring{std::move(primes)}; }

FiniteLocalization universal_inverting_finite(const RingPtr& ring, const HomPair& pair) {
    if (pair.ring() != ring) throw Error(ErrorCode::RingMismatch, "pair belongs to a different ring");
    if (!pair.ideal.is_proper() || !validate_pair(ring, pair.ideal.members, pair.mset.members).ok()) {
        throw Error(ErrorCode::InvalidPair, "pair fails the necessary conditions");
    }
    auto q = make_quotient(ring, pair.ideal);
    const auto& psi = q.projection;
    if (!(psi.kernel().members == pair.ideal.members)) throw Error(ErrorCode::InvalidPair, "kernel of psi differs from a");
    if (!(psi.preimage(units(q.ring).members) == pair.mset.members)) {
        throw Error(ErrorCode::InvalidPair, "unit preimage of psi differs from M");
    }
    return FiniteLocalization{q.ring, q.projection};
}

RingMorphism factor_through(const RingMorphism& psi, const RingMorphism& f, const Limits& limits) {
    if (psi.source() != f.source()) throw Error(ErrorCode::RingMismatch, "psi and f have different sources");
    const auto pair = pair_of_morphism(psi);
    const auto f_pair = pair_of_morphism(f);
    if (!pair.ideal.members.is_subset_of(f_pair.ideal.members)) {
        throw Error(ErrorCode::NoFactorization, "ker f does not contain the kernel of psi");
    }
    if (!pair.mset.members.is_subset_of(f_pair.mset.members)) {
        throw Error(ErrorCode::NoFactorization, "f does not invert every element inverted by psi");
    }
    std::vector<RingMorphism> factors;
    for (auto& g : enumerate_morphisms(psi.target(), f.target(), limits)) {
        if (compose(g, psi) == f) factors.push_back(std::move(g));
    }
    if (factors.size() != 1) {
        throw Error(ErrorCode::Internal, "expected exactly one factoring morphism, found " + std::to_string(factors.size()));
    }
    return std::move(factors.front());
}

GeneratedSubring generated_subring(const RingMorphism& f) {
    const FiniteRing& S = *f.target();
    const auto n = static_cast<Elem>(S.size());
    const auto su = units(f.target()).members;

    ElementSet members(n);
    std::vector<Elem> work;
    auto push = [&](Elem x) {
        if (!members.contains(x)) {
            members.insert(x);
            work.push_back(x);
        }
    };
    push(S.zero());
    push(S.one());
    for (Elem r = 0; r < f.source()->size(); ++r) {
        const Elem y = f(r);
        push(y);
        if (su.contains(y)) {
            for (Elem z = 0; z < n; ++z) {
                if (S.mul(y, z) == S.one() && S.mul(z, y) == S.one()) {
                    push(z);
                    break;
                }
            }
        }
    }
    while (!work.empty()) {
        const Elem x = work.back();
        work.pop_back();
        push(S.neg(x));
        for (Elem y : members.members()) {
            push(S.add(x, y));
            push(S.mul(x, y));
            push(S.mul(y, x));
        }
    }

    const auto elems = members.members();
    const std::size_t m = elems.size();
    std::vector<Elem> index(n, 0);
    for (Elem i = 0; i < m; ++i) index[elems[i]] = i;
    std::vector<Elem> add(m * m), mul(m * m);
    for (Elem i = 0; i < m; ++i) {
        for (Elem j = 0; j < m; ++j) {
            add[i * m + j] = index[S.add(elems[i], elems[j])];
            mul[i * m + j] = index[S.mul(elems[i], elems[j])];
        }
    }
    auto sub = FiniteRing::build(m, std::move(add), std::move(mul), index[S.zero()], index[S.one()],
                                 provenance::RawTable{"subring"}, false);
    auto inclusion = RingMorphism::checked(sub, f.target(), elems);
    return GeneratedSubring{std::move(sub), std::move(inclusion)};
}

namespace {

Elem index_in(const GeneratedSubring& t, Elem s) {
    const auto& imgs = t.inclusion.images();
    auto it = std::lower_bound(imgs.begin(), imgs.end(), s);
    if (it == imgs.end() || *it != s) throw Error(ErrorCode::Internal, "element outside generated subring");
    return static_cast<Elem>(it - imgs.begin());
}

}  // namespace

Factorization canonical_factorization(const RingMorphism& f) {
    const auto pair = pair_of_morphism(f);
    auto q = make_quotient(f.source(), pair.ideal);
    auto t = generated_subring(f);

    const auto* quot = std::get_if<provenance::Quotient>(&q.ring->provenance());
    std::vector<Elem> g_images(q.ring->size());
    for (Elem i = 0; i < q.ring->size(); ++i) g_images[i] = index_in(t, f(quot->representatives[i]));
    auto g = RingMorphism::checked(q.ring, t.ring, std::move(g_images));

    Factorization out{q.projection, RingMorphism::identity(q.ring), std::move(g), t.inclusion};
    out.g_surjective = out.g.is_surjective();
    out.g_epimorphism = is_ring_epimorphism(out.g);
    out.epsilon_injective = out.epsilon.is_injective();
    out.composite_matches = compose(out.epsilon, compose(out.g, compose(out.chi, out.pi))) == f;
    return out;
}

Corestriction epimorphic_corestriction(const RingMorphism& f) {
    auto t = generated_subring(f);
    std::vector<Elem> images(f.source()->size());
    for (Elem r = 0; r < images.size(); ++r) images[r] = index_in(t, f(r));
    auto cor = RingMorphism::checked(f.source(), t.ring, std::move(images));
    Corestriction out{t.ring, std::move(cor)};
    out.is_epi = is_ring_epimorphism(out.corestricted);
    out.pair_preserved = pair_of_morphism(out.corestricted) == pair_of_morphism(f);
    return out;
}

}  // namespace homposet
