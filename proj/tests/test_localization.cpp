#include <gtest/gtest.h>

#include "homposet/epimorphism.hpp"
#include "homposet/localization.hpp"
#include "homposet/search.hpp"
#include "homposet/structure.hpp"

using namespace homposet;

namespace {

HomPair pair_in(const RingPtr& r, std::initializer_list<Elem> ideal, std::initializer_list<Elem> mset) {
    return HomPair{Ideal{r, ElementSet(r->size(), ideal)}, MultiplicativeSet{r, ElementSet(r->size(), mset)}};
}

}  // namespace

TEST(Localization, FiniteUniversalRing) {
    auto z6 = make_zmod(6);
    const auto loc = universal_inverting_finite(z6, pair_in(z6, {0, 2, 4}, {1, 3, 5}));
    EXPECT_TRUE(loc.ring->same_tables(*make_zmod(2)));
    EXPECT_EQ(loc.canonical(3), 1u);
    auto z4 = make_zmod(4);
    EXPECT_EQ(universal_inverting_finite(z4, pair_in(z4, {0, 2}, {1, 3})).ring->size(), 2u);
    EXPECT_THROW(universal_inverting_finite(z6, pair_in(z6, {0, 2, 4}, {1, 5})), Error);
}

TEST(Localization, FactorThrough) {
    auto z6 = make_zmod(6);
    auto z2 = make_zmod(2);
    auto f4 = make_finite_field(2, 2);
    const auto psi = enumerate_morphisms(z6, z2).front();
    const auto emb = enumerate_morphisms(z2, f4).front();
    const auto f = compose(emb, psi);
    EXPECT_EQ(factor_through(psi, f), emb);
    EXPECT_EQ(factor_through(psi, psi), RingMorphism::identity(z2));
    try {
        factor_through(psi, RingMorphism::identity(z6));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoFactorization);
    }
}

TEST(Localization, RationalSubrings) {
    const auto at2 = localize_integers(zhom::PrimeSet::finite({2}));
    EXPECT_TRUE(at2.contains(Fraction::make(1, 3)));
    EXPECT_FALSE(at2.contains(Fraction::make(1, 2)));
    EXPECT_TRUE(at2.contains(Fraction::make(2, 4) * Fraction::make(2, 1)));
    EXPECT_TRUE(at2.is_unit_image(3));
    EXPECT_FALSE(at2.is_unit_image(6));
    const auto q = localize_integers(zhom::PrimeSet::empty());
    EXPECT_TRUE(q.contains(Fraction::make(5, 7)));
    const auto z = localize_integers(zhom::PrimeSet::all());
    EXPECT_FALSE(z.contains(Fraction::make(1, 5)));
    EXPECT_TRUE(z.contains(Fraction::make(-10, 5)));
    EXPECT_EQ(at2.pair(), zhom::z_zero_kernel(zhom::PrimeSet::finite({2})));
}

TEST(Localization, CanonicalFactorization) {
    auto z4 = make_zmod(4);
    auto z2 = make_zmod(2);
    auto f4 = make_finite_field(2, 2);
    const auto f = compose(enumerate_morphisms(z2, f4).front(), enumerate_morphisms(z4, z2).front());
    const auto fac = canonical_factorization(f);
    EXPECT_TRUE(fac.valid());
    EXPECT_EQ(fac.epsilon.source()->size(), 2u);
    EXPECT_FALSE(fac.epsilon.is_surjective());
}

TEST(Localization, EpimorphicCorestriction) {
    const auto emb = enumerate_morphisms(make_zmod(2), make_finite_field(2, 2)).front();
    const auto c = epimorphic_corestriction(emb);
    EXPECT_EQ(c.subring->size(), 2u);
    EXPECT_TRUE(c.corestricted.is_surjective());
    EXPECT_TRUE(c.is_epi);
    EXPECT_TRUE(c.pair_preserved);
    auto z6 = make_zmod(6);
    const auto pi = enumerate_morphisms(z6, make_zmod(2)).front();
    const auto c2 = epimorphic_corestriction(pi);
    EXPECT_TRUE(c2.pair_preserved);
    EXPECT_EQ(pair_of_morphism(c2.corestricted), pair_in(z6, {0, 2, 4}, {1, 3, 5}));
}
