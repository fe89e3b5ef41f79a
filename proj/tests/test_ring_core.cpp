#include <gtest/gtest.h>

#include "homposet/description.hpp"
#include "homposet/epimorphism.hpp"
#include "homposet/morphism.hpp"
#include "homposet/product.hpp"
#include "homposet/search.hpp"
#include "homposet/structure.hpp"
#include "test_support.hpp"

using namespace homposet;
using homposet::testing::derived;
using homposet::testing::members_of;

namespace {

ErrorCode code_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::Internal;
}

}  // namespace

TEST(Constructors, ZeroRingRejected) {
    EXPECT_EQ(code_of([] { make_zmod(1); }), ErrorCode::ZeroRingExcluded);
}

TEST(Constructors, FieldOfOrderFour) {
    auto f4 = make_finite_field(2, 2);
    EXPECT_EQ(f4->size(), 4u);
    EXPECT_EQ(units(f4).members.count(), derived()["gf4_units"].get<std::size_t>());
    EXPECT_TRUE(is_field(*f4));
    EXPECT_FALSE(find_axiom_violation(*f4));
}

TEST(Constructors, SmallestIrreducibles) {
    EXPECT_EQ(smallest_irreducible(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(smallest_irreducible(2, 4), (std::vector<std::uint32_t>{1, 0, 0, 1, 1}));
    EXPECT_EQ(code_of([] { make_finite_field(4, 1); }), ErrorCode::NotPrime);
}

TEST(Constructors, ProductUnits) {
    auto r = make_product(make_zmod(2), make_zmod(3));
    EXPECT_EQ(r->size(), 6u);
    EXPECT_EQ(units(r).members.members(), members_of(derived()["z2xz3_units"]));
}

TEST(Constructors, ProductOfTwoFieldsHasThreeProperIdeals) {
    auto r = make_product(make_zmod(2), make_zmod(2));
    std::size_t proper = 0;
    for (const auto& i : enumerate_ideals(r)) proper += i.is_proper() ? 1 : 0;
    EXPECT_EQ(proper, derived()["z2xz2_proper_ideals"].get<std::size_t>());
}

TEST(Constructors, MatrixRing) {
    auto m = make_matrix_ring(make_zmod(2), 2);
    EXPECT_EQ(m->size(), derived()["m2f2_size"].get<std::size_t>());
    EXPECT_EQ(units(m).members.count(), derived()["m2f2_units"].get<std::size_t>());
    EXPECT_FALSE(m->is_commutative());
    EXPECT_EQ(code_of([] { make_matrix_ring(make_zmod(4), 2); }), ErrorCode::BaseNotField);
}

TEST(Constructors, CapEnforced) {
    Limits tight{8, 8};
    EXPECT_EQ(code_of([&] { make_zmod(9, tight); }), ErrorCode::CapExceeded);
    EXPECT_EQ(code_of([&] { make_matrix_ring(make_zmod(2), 2, tight); }), ErrorCode::CapExceeded);
}

TEST(Constructors, FromTablesRejectsBrokenAxioms) {
    // Z/2 with a multiplication that is not distributive.
    std::vector<Elem> add{0, 1, 1, 0};
    std::vector<Elem> mul{0, 0, 0, 1};
    EXPECT_NO_THROW(FiniteRing::from_tables(2, add, mul, 0, 1));
    mul = {1, 0, 0, 1};
    EXPECT_EQ(code_of([&] { FiniteRing::from_tables(2, add, mul, 0, 1); }), ErrorCode::InvalidArgument);
}

TEST(Constructors, RegenerateReproducesTables) {
    for (auto r : {make_zmod(12), make_finite_field(3, 2), make_product(make_zmod(2), make_zmod(4)),
                   make_matrix_ring(make_zmod(2), 2)}) {
        EXPECT_TRUE(regenerate(*r)->same_tables(*r)) << r->describe();
    }
}

TEST(Quotients, ZSixModTwo) {
    auto z6 = make_zmod(6);
    auto q = make_quotient(z6, Ideal::checked(z6, ElementSet(6, {0, 2, 4})));
    EXPECT_EQ(q.ring->size(), 2u);
    EXPECT_EQ(q.projection(3), 1u);
    EXPECT_TRUE(q.ring->same_tables(*make_zmod(2)));
    EXPECT_EQ(code_of([&] { make_quotient(z6, Ideal::whole(z6)); }), ErrorCode::ImproperIdeal);
    EXPECT_EQ(code_of([&] { Ideal::checked(z6, ElementSet(6, {0, 2})); }), ErrorCode::NotAnIdeal);
}

TEST(Structure, RegularEqualsUnits) {
    EXPECT_EQ(regular_elements(make_zmod(6)).members.members(), members_of(derived()["z6_regular"]));
    auto m = make_matrix_ring(make_zmod(2), 2);
    EXPECT_EQ(regular_elements(m).members, units(m).members);
}

TEST(Structure, JacobsonRadical) {
    EXPECT_EQ(jacobson_radical(make_zmod(4)).members.members(), members_of(derived()["z4_jacobson"]));
    EXPECT_EQ(jacobson_radical(make_zmod(6)).members.members(), members_of(derived()["z6_jacobson"]));
}

TEST(Structure, IdealEnumeration) {
    EXPECT_EQ(enumerate_ideals(make_zmod(6)).size(), derived()["z6_ideals"].get<std::size_t>());
    EXPECT_EQ(enumerate_ideals(make_zmod(4)).size(), derived()["z4_ideals"].get<std::size_t>());
    auto m = make_matrix_ring(make_zmod(2), 2);
    EXPECT_EQ(enumerate_ideals(m).size(), derived()["m2f2_ideals"].get<std::size_t>());
    for (Elem e = 1; e < m->size(); ++e) EXPECT_TRUE(ideal_generated_by(m, {e}).members.is_full());
}

TEST(Structure, SaturationAndDirectFiniteness) {
    auto z6 = make_zmod(6);
    EXPECT_TRUE(is_saturated(z6, ElementSet(6, {1, 3, 5})));
    auto z4 = make_zmod(4);
    EXPECT_FALSE(is_saturated(z4, ElementSet(4, {1})));
    EXPECT_TRUE(is_directly_finite(make_matrix_ring(make_zmod(2), 2)));
}

TEST(Structure, DenominatorSetInZSix) {
    auto z6 = make_zmod(6);
    auto report = denominator_analysis(z6, ElementSet(6, {1, 3}));
    EXPECT_TRUE(report.is_left_ore);
    EXPECT_TRUE(report.is_left_denominator);
    EXPECT_EQ(report.ass.members(), members_of(derived()["z6_ass_1_3"]));
    ASSERT_TRUE(report.fraction_ring);
    EXPECT_TRUE(report.fraction_ring->ring->same_tables(*make_zmod(2)));
    EXPECT_EQ(code_of([&] { denominator_analysis(z6, ElementSet(6, {2})); }), ErrorCode::NotASubmonoid);
}

TEST(Search, KnownCounts) {
    EXPECT_EQ(enumerate_morphisms(make_zmod(6), make_zmod(2)).size(), derived()["z6_to_z2_morphisms"].get<std::size_t>());
    EXPECT_EQ(enumerate_morphisms(make_zmod(2), make_zmod(3)).size(), derived()["z2_to_z3_morphisms"].get<std::size_t>());
    const auto fs = enumerate_morphisms(make_finite_field(2, 2), make_matrix_ring(make_zmod(2), 2));
    EXPECT_EQ(fs.size(), derived()["gf4_to_m2f2_morphisms"].get<std::size_t>());
    for (const auto& f : fs) EXPECT_TRUE(f.is_injective());
}

TEST(Search, CapExceededIsExplicit) {
    EXPECT_EQ(code_of([] { enumerate_morphisms(make_zmod(40, {64, 32}), make_zmod(2)); }), ErrorCode::CapExceeded);
}

TEST(Search, AgreesWithExhaustiveMapsOnSmallRings) {
    auto z2z2 = make_product(make_zmod(2), make_zmod(2));
    auto f4 = make_finite_field(2, 2);
    for (const auto& [src, dst] : std::vector<std::pair<RingPtr, RingPtr>>{{z2z2, z2z2}, {f4, f4}, {z2z2, f4}, {f4, z2z2}}) {
        std::size_t brute = 0;
        std::vector<Elem> images(4);
        for (std::uint32_t code = 0; code < 256; ++code) {
            for (int i = 0; i < 4; ++i) images[i] = (code >> (2 * i)) & 3;
            if (!find_morphism_violation(*src, *dst, images)) ++brute;
        }
        EXPECT_EQ(enumerate_morphisms(src, dst).size(), brute);
    }
}

TEST(Morphisms, CompositionChecksEndpoints) {
    auto z6 = make_zmod(6);
    auto z2 = make_zmod(2);
    auto pi = enumerate_morphisms(z6, z2).front();
    EXPECT_EQ(code_of([&] { compose(pi, pi); }), ErrorCode::NonComposableChain);
    EXPECT_EQ(compose(RingMorphism::identity(z2), pi), pi);
}

TEST(Epimorphisms, SmithDiagonal) {
    IntMatrix m{{2, 4}, {6, 8}};
    auto d = smith_diagonal(m);
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0], 2);
    EXPECT_EQ(d[1], 4);
}

TEST(Epimorphisms, FieldEmbeddingIsNotEpi) {
    auto f = enumerate_morphisms(make_zmod(2), make_finite_field(2, 2)).front();
    EXPECT_FALSE(is_ring_epimorphism(f));
    EXPECT_EQ(tensor_cokernel(f).order(), derived()["gf2_gf4_tensor_order"].get<int>());
}

TEST(Epimorphisms, SurjectionsAndIsomorphisms) {
    auto z6 = make_zmod(6);
    for (auto target : {make_zmod(2), make_zmod(3), z6}) {
        for (const auto& f : enumerate_morphisms(z6, target)) EXPECT_TRUE(is_ring_epimorphism(f));
    }
}

TEST(Products, ProjectionTriple) {
    auto p = make_product(make_zmod(2), make_zmod(3));
    auto t = decompose_product_morphism(product_projection(p, 0));
    EXPECT_EQ(t.idempotent, t.target->one());
    EXPECT_EQ(t.right_corner.ring->size(), 1u);
    EXPECT_EQ(rebuild_product_morphism(t), product_projection(p, 0));
}

TEST(Products, ChineseRemainderTriple) {
    auto p = make_product(make_zmod(2), make_zmod(3));
    auto z6 = make_zmod(6);
    auto fs = enumerate_morphisms(p, z6);
    ASSERT_EQ(fs.size(), 1u);
    auto t = decompose_product_morphism(fs.front());
    EXPECT_EQ(t.idempotent, derived()["crt_idempotent"].get<Elem>());
    EXPECT_EQ(t.left_corner.ring->size(), 2u);
    EXPECT_EQ(t.right_corner.ring->size(), 3u);
    EXPECT_EQ(rebuild_product_morphism(t), fs.front());
    EXPECT_EQ(code_of([&] { decompose_product_morphism(RingMorphism::identity(z6)); }), ErrorCode::NotAProduct);
}

TEST(Descriptions, RoundTrip) {
    for (const char* text : {"zmod:6", "gf:2:2", "gf:3:1", "product:zmod:2:zmod:3", "matrix:2:gf:2:1",
                             "quot:zmod:12:gens=4", "product:quot:zmod:8:gens=4:gf:2:2"}) {
        auto r = parse_description(text);
        EXPECT_EQ(r->describe(), text);
        EXPECT_TRUE(parse_description(r->describe())->same_tables(*r)) << text;
    }
    EXPECT_EQ(parse_description(" quot : zmod:6 : gens=2,4 ")->describe(), "quot:zmod:6:gens=2");
}

TEST(Descriptions, Errors) {
    for (const char* text : {"", "zmod", "zmod:1", "zmod:x", "gf:4:1", "product:zmod:2", "zmod:2:extra",
                             "matrix:2:zmod:4", "quot:zmod:6:gens=9", "quot:zmod:6", "ring:3"}) {
        EXPECT_EQ(code_of([&] { parse_description(text); }), ErrorCode::ParseError) << text;
    }
    EXPECT_EQ(code_of([] { parse_description("zmod:1000"); }), ErrorCode::CapExceeded);
}
