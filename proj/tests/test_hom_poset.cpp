#include <gtest/gtest.h>

#include "homposet/description.hpp"
#include "homposet/hom_poset.hpp"
#include "homposet/render.hpp"
#include "homposet/search.hpp"
#include "homposet/structure.hpp"
#include "test_support.hpp"

using namespace homposet;
using homposet::testing::derived;
using homposet::testing::members_of;

namespace {

HomPair pair_in(const RingPtr& r, std::initializer_list<Elem> ideal, std::initializer_list<Elem> mset) {
    return HomPair{Ideal{r, ElementSet(r->size(), ideal)}, MultiplicativeSet{r, ElementSet(r->size(), mset)}};
}

void expect_pairs(const HomPoset& poset, const nlohmann::json& expected) {
    ASSERT_EQ(poset.pairs().size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(poset.pairs()[i].ideal.members.members(), members_of(expected[i][0])) << i;
        EXPECT_EQ(poset.pairs()[i].mset.members.members(), members_of(expected[i][1])) << i;
    }
}

}  // namespace

TEST(HomPoset, ZSix) {
    auto z6 = make_zmod(6);
    const auto poset = hom_poset(z6);
    expect_pairs(poset, derived()["hom_z6"]);
    EXPECT_EQ(poset.least(), 0u);
    EXPECT_FALSE(poset.greatest());
    EXPECT_EQ(hasse(poset).size(), 2u);
    EXPECT_EQ(hasse(hom_poset(z6, true)).size(), 4u);
}

TEST(HomPoset, ZFourIsAChainWithGreatestElement) {
    const auto poset = hom_poset(make_zmod(4));
    expect_pairs(poset, derived()["hom_z4"]);
    EXPECT_TRUE(poset.leq(0, 1));
    ASSERT_TRUE(poset.greatest());
    EXPECT_EQ(*poset.greatest(), 1u);
}

TEST(HomPoset, MatrixRingHasOneElement) {
    const auto poset = hom_poset(make_matrix_ring(make_zmod(2), 2));
    expect_pairs(poset, derived()["hom_m2f2"]);
    EXPECT_EQ(poset.maximal(), std::vector<std::size_t>{0});
}

TEST(HomPoset, ProductOfTwoFields) {
    EXPECT_EQ(hom_poset(make_product(make_zmod(2), make_zmod(2))).size(),
              derived()["hom_z2xz2_size"].get<std::size_t>());
}

TEST(HomPoset, PairOfProjection) {
    auto z6 = make_zmod(6);
    const auto pi = enumerate_morphisms(z6, make_zmod(2)).front();
    EXPECT_EQ(pair_of_morphism(pi), pair_in(z6, {0, 2, 4}, {1, 3, 5}));
}

TEST(HomPoset, PairValidationClauses) {
    auto z6 = make_zmod(6);
    EXPECT_TRUE(validate_pair(z6, ElementSet(6, {0, 2, 4}), ElementSet(6, {1, 3, 5})).ok());
    const auto not_stable = validate_pair(z6, ElementSet(6, {0, 2, 4}), ElementSet(6, {1, 5}));
    EXPECT_FALSE(not_stable.stable_and_disjoint);
    EXPECT_FALSE(not_stable.ok());
    const auto not_regular = validate_pair(z6, ElementSet(6, {0}), ElementSet(6, {1, 2, 4, 5}));
    EXPECT_FALSE(not_regular.regular_modulo_ideal);
}

TEST(HomPoset, OrderMeetJoin) {
    auto z6 = make_zmod(6);
    const auto bottom = pair_in(z6, {0}, {1, 5});
    const auto two = pair_in(z6, {0, 2, 4}, {1, 3, 5});
    const auto three = pair_in(z6, {0, 3}, {1, 2, 4, 5});
    EXPECT_TRUE(leq(bottom, two));
    EXPECT_FALSE(leq(two, three));
    EXPECT_EQ(meet(two, three), bottom);
    const auto bar = hom_poset(z6, true);
    EXPECT_TRUE(std::holds_alternative<Top>(join_ext(two, three, bar)));
    EXPECT_EQ(std::get<HomPair>(join_ext(bottom, two, bar)), two);
    EXPECT_THROW(leq(two, pair_in(make_zmod(4), {0}, {1, 3})), Error);
}

TEST(HomPoset, MaximalElementsAndSpectrum) {
    auto z6 = make_zmod(6);
    const auto maxes = max_elements(hom_poset(z6));
    ASSERT_EQ(maxes.size(), 2u);
    EXPECT_EQ(maxes[0], pair_in(z6, {0, 3}, {1, 2, 4, 5}));
    EXPECT_EQ(maxes[1], pair_in(z6, {0, 2, 4}, {1, 3, 5}));
    EXPECT_EQ(spec_correspondence(z6).size(), 2u);
    auto z4 = make_zmod(4);
    EXPECT_EQ(max_elements(hom_poset(z4)), std::vector<HomPair>{pair_in(z4, {0, 2}, {1, 3})});
    EXPECT_THROW(max_elements(hom_poset(z6, true)), Error);
    EXPECT_THROW(spec_correspondence(make_matrix_ring(make_zmod(2), 2)), Error);
}

TEST(HomPoset, PullBackAndFunctor) {
    auto z6 = make_zmod(6);
    auto z2 = make_zmod(2);
    const auto pi = enumerate_morphisms(z6, z2).front();
    EXPECT_EQ(pull_back(pi, pair_in(z2, {0}, {1})), pair_in(z6, {0, 2, 4}, {1, 3, 5}));
    const auto map = hom_functor(pi);
    EXPECT_TRUE(map.is_order_preserving());
    EXPECT_EQ(map.image.size(), 1u);
}

TEST(HomPoset, LeastOfFiber) {
    auto z6 = make_zmod(6);
    EXPECT_EQ(least_of_fiber(z6, Ideal{z6, ElementSet(6, {0, 2, 4})}), pair_in(z6, {0, 2, 4}, {1, 3, 5}));
    auto z4 = make_zmod(4);
    EXPECT_EQ(least_of_fiber(z4, Ideal{z4, ElementSet(4, {0, 2})}), pair_in(z4, {0, 2}, {1, 3}));
}

TEST(HomPoset, LocalMorphisms) {
    auto z2 = make_zmod(2);
    EXPECT_TRUE(is_local_morphism(enumerate_morphisms(make_zmod(4), z2).front()));
    EXPECT_FALSE(is_local_morphism(enumerate_morphisms(make_zmod(6), z2).front()));
}

TEST(HomPoset, ProductPosetBijection) {
    const auto iso = product_decompose_poset(make_zmod(4), make_zmod(9));
    EXPECT_TRUE(iso.bijective);
    EXPECT_TRUE(iso.order_isomorphism);
    EXPECT_EQ(iso.product.size(), derived()["hom_bar_z4xz9"].get<std::size_t>());
    EXPECT_EQ(iso.left.size(), derived()["hom_bar_z4"].get<std::size_t>());
    EXPECT_EQ(iso.right.size(), derived()["hom_bar_z9"].get<std::size_t>());
}

TEST(HomPoset, DivCprMax) {
    const auto m = div_cpr_max(make_matrix_ring(make_zmod(2), 2), 16);
    EXPECT_TRUE(m.div.empty());
    EXPECT_TRUE(m.cpr.empty());
    EXPECT_EQ(m.max.size(), 1u);
    EXPECT_TRUE(m.chain_holds);
    const auto z6 = div_cpr_max(make_zmod(6), 16);
    EXPECT_EQ(z6.div.size(), 2u);
    EXPECT_EQ(z6.div, z6.cpr);
    EXPECT_EQ(z6.cpr, z6.max);
    const auto z4 = div_cpr_max(make_zmod(4), 16);
    EXPECT_EQ(z4.div.size(), 1u);
    EXPECT_EQ(z4.max.size(), 1u);
}

TEST(HomPoset, DirectLimitChains) {
    auto z4 = make_zmod(4);
    auto z2 = make_zmod(2);
    const auto r = verify_direct_limit({z4, z2}, {enumerate_morphisms(z4, z2).front()});
    EXPECT_TRUE(r.isomorphism());
    EXPECT_EQ(r.colimit_size, 1u);

    auto f2 = make_finite_field(2, 1);
    auto f4 = make_finite_field(2, 2);
    auto f16 = make_finite_field(2, 4);
    const auto a = enumerate_morphisms(f2, f4).front();
    const auto b = enumerate_morphisms(f4, f16).front();
    EXPECT_TRUE(verify_direct_limit({f2, f4, f16}, {a, b}).isomorphism());
    EXPECT_THROW(verify_direct_limit({f2, f4, f16}, {b, a}), Error);
}

TEST(Render, MatrixRingDot) {
    const auto dot = render_dot(hom_poset(parse_description("matrix:2:gf:2:1")));
    const std::string expected =
        "digraph hom {\n"
        "  label=\"Hom(matrix:2:gf:2:1)\";\n"
        "  rankdir=BT;\n"
        "  node [shape=box];\n"
        "  n0 [label=\"({0}, {6,7,9,11,13,14})\"];\n"
        "}\n";
    EXPECT_EQ(dot, expected);
}

TEST(Render, JsonShape) {
    const auto doc = nlohmann::json::parse(render_json(hom_poset(make_zmod(6), true)));
    EXPECT_EQ(doc["ring"], "zmod:6");
    ASSERT_EQ(doc["elements"].size(), 4u);
    EXPECT_TRUE(doc["elements"][3]["top"].get<bool>());
    EXPECT_TRUE(doc["elements"][3]["ideal"].is_null());
    EXPECT_EQ(doc["hasse"].size(), 4u);
    EXPECT_EQ(render_json(hom_poset(make_zmod(6), true)), render_json(hom_poset(make_zmod(6), true)));
}

TEST(Render, TextFlagsLeast) {
    const auto text = render_text(hom_poset(make_zmod(6)));
    EXPECT_NE(text.find("least"), std::string::npos);
    EXPECT_NE(text.find("3 elements"), std::string::npos);
}
