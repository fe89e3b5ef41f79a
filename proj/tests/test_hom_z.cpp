#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "homposet/hom_z.hpp"

using namespace homposet;
using namespace homposet::zhom;

TEST(HomZ, RuleThreeAndTwoAndFour) {
    EXPECT_TRUE(z_leq(z_zero_kernel(PrimeSet::finite({2, 3})), z_modular(12)));
    EXPECT_TRUE(z_leq(z_modular(4), z_modular(2)));
    EXPECT_FALSE(z_leq(z_modular(2), z_modular(4)));
    for (const auto& p : {PrimeSet::empty(), PrimeSet::all(), PrimeSet::finite({2, 3}), PrimeSet::cofinite({5})}) {
        EXPECT_FALSE(z_leq(z_modular(6), z_zero_kernel(p)));
    }
}

TEST(HomZ, ExtremeZeroKernelElements) {
    const auto top_zero = z_zero_kernel(PrimeSet::empty());
    const auto least = z_zero_kernel(PrimeSet::all());
    EXPECT_TRUE(z_leq(least, top_zero));
    EXPECT_TRUE(z_leq(least, z_modular(30)));
    // (0, Z \ {0}) is maximal: nothing strictly above it.
    EXPECT_FALSE(z_leq(top_zero, z_modular(2)));
    EXPECT_FALSE(z_leq(top_zero, z_zero_kernel(PrimeSet::finite({2}))));
}

TEST(HomZ, Meets) {
    EXPECT_EQ(z_meet(z_modular(4), z_modular(6)), z_modular(12));
    EXPECT_EQ(z_meet(z_zero_kernel(PrimeSet::finite({2})), z_zero_kernel(PrimeSet::finite({3}))),
              z_zero_kernel(PrimeSet::finite({2, 3})));
    EXPECT_EQ(z_meet(z_modular(6), z_zero_kernel(PrimeSet::finite({5}))), z_zero_kernel(PrimeSet::finite({2, 3, 5})));
}

TEST(HomZ, Joins) {
    EXPECT_EQ(std::get<Element>(z_join(z_modular(4), z_modular(6))), z_modular(2));
    EXPECT_TRUE(std::holds_alternative<Top>(z_join(z_modular(4), z_modular(9))));
    EXPECT_EQ(std::get<Element>(z_join(z_zero_kernel(PrimeSet::finite({2, 3})), z_zero_kernel(PrimeSet::finite({3, 5})))),
              z_zero_kernel(PrimeSet::finite({3})));
    EXPECT_EQ(std::get<Element>(z_join(z_zero_kernel(PrimeSet::finite({2})), z_modular(12))), z_modular(4));
    EXPECT_TRUE(std::holds_alternative<Top>(z_join(z_zero_kernel(PrimeSet::finite({5})), z_modular(12))));
}

TEST(HomZ, RhoValues) {
    EXPECT_EQ(rho(z_modular(12)).to_string(), "{2:2, 3:1, 0slot:0}");
    EXPECT_EQ(rho(z_zero_kernel(PrimeSet::finite({2}))).slot0, 1u);
    EXPECT_TRUE(rho(z_zero_kernel(PrimeSet::all())).fallback.is_infinite());
}

TEST(HomZ, ParseRoundTrip) {
    for (const char* t : {"n:12", "0:P=2,3", "0:coP=", "0:coP=5,7", "0:P="}) EXPECT_EQ(Element::parse(t).to_string(), t);
    for (const char* t : {"n:1", "n:x", "0:P=4", "12", "0:Q=2"}) EXPECT_THROW(Element::parse(t), Error) << t;
}

TEST(HomZ, RhoReversesOrderOnRandomGrid) {
    std::mt19937_64 rng(20261015);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= 100; ++p) {
        if (is_prime(p)) primes.push_back(p);
    }
    auto random_element = [&]() {
        if (rng() % 2 == 0) return z_modular(2 + rng() % 9999);
        std::vector<std::uint64_t> chosen;
        for (auto p : primes) {
            if (rng() % 8 == 0) chosen.push_back(p);
        }
        return rng() % 2 ? z_zero_kernel(PrimeSet::finite(chosen)) : z_zero_kernel(PrimeSet::cofinite(chosen));
    };
    for (int i = 0; i < 2000; ++i) {
        const auto x = random_element();
        const auto y = random_element();
        EXPECT_EQ(z_leq(x, y), rho(y).pointwise_leq(rho(x))) << x.to_string() << " " << y.to_string();
    }
}

TEST(HomZ, IntegerMorphismPair) {
    EXPECT_EQ(pair_of_integer_morphism(IntegerMorphism{make_zmod(12)}), z_modular(12));
    EXPECT_EQ(pair_of_integer_morphism(IntegerMorphism{make_finite_field(2, 2)}), z_modular(2));
}

TEST(HomZ, ModularElementsMatchHomOfQuotients) {
    // Hom(Z/n) is the set of (dZ) with d | n, d >= 2, ordered as in Hom(Z).
    for (std::uint32_t n = 2; n <= 60; ++n) {
        const auto ring = make_zmod(n);
        const auto poset = hom_poset(ring);
        std::vector<Element> elems;
        for (const auto& p : poset.pairs()) {
            std::uint64_t d = n;
            for (Elem x : p.ideal.members.members()) d = std::gcd<std::uint64_t>(d, x == 0 ? n : x);
            elems.push_back(z_modular(d));
        }
        std::size_t divisors = 0;
        for (std::uint32_t d = 2; d <= n; ++d) divisors += n % d == 0 ? 1 : 0;
        ASSERT_EQ(elems.size(), divisors) << n;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (std::size_t j = 0; j < elems.size(); ++j) {
                EXPECT_EQ(poset.leq(i, j), z_leq(elems[i], elems[j])) << n;
            }
        }
    }
}
