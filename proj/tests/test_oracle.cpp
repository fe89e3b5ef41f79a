#include <gtest/gtest.h>

#include "homposet/oracle.hpp"

using namespace homposet;
using namespace homposet::oracle;

TEST(Oracle, DegenerateCatalog) {
    const auto catalog = Catalog::generate(1);
    EXPECT_TRUE(catalog.empty());
    const auto report = verify_theorems(catalog);
    EXPECT_TRUE(report.degenerate);
    EXPECT_FALSE(report.all_passed());
}

TEST(Oracle, SmallCatalogContents) {
    const auto catalog = Catalog::generate(6);
    EXPECT_TRUE(catalog.find(*make_zmod(6)));
    EXPECT_TRUE(catalog.find(*make_finite_field(2, 2)));
    EXPECT_TRUE(catalog.find(*make_product(make_zmod(2), make_zmod(3))));
    EXPECT_FALSE(catalog.find(*make_zmod(7)));
}

TEST(Oracle, HomConstructionMatchesSearch) {
    const auto catalog = Catalog::generate(8);
    for (const auto& r : catalog.rings()) {
        const auto c = verify_hom_construction(r, catalog);
        EXPECT_TRUE(c.passed()) << r->describe();
    }
    const auto z6 = catalog.rings()[*catalog.find(*make_zmod(6))];
    EXPECT_EQ(realized_pairs(z6, catalog).size(), 3u);
}

TEST(Oracle, AllClaimsPassOnSmallCatalog) {
    const auto report = verify_theorems(Catalog::generate(9));
    EXPECT_TRUE(report.all_passed()) << report.to_text();
    EXPECT_EQ(report.claims.size(), claim_ids().size());
}

TEST(Oracle, FaultInjectionIsDetected) {
    Options options;
    options.only = {"pair-invariants"};
    options.inject_corrupt_pair = true;
    const auto report = verify_theorems(Catalog::generate(4), options);
    ASSERT_EQ(report.claims.size(), 1u);
    EXPECT_FALSE(report.claims[0].passed());
    EXPECT_FALSE(report.claims[0].witnesses.empty());
}

TEST(Oracle, FilterAndUnknownIds) {
    Options options;
    options.only = {"integers", "spectrum"};
    const auto report = verify_theorems(Catalog::generate(6), options);
    ASSERT_EQ(report.claims.size(), 2u);
    EXPECT_EQ(report.claims[0].id, "spectrum");
    options.only = {"nope"};
    EXPECT_THROW(verify_theorems(Catalog::generate(6), options), Error);
}

TEST(Oracle, JsonIsDeterministic) {
    Options options;
    options.only = {"hom-construction", "bounded-lattice"};
    const auto a = verify_theorems(Catalog::generate(8), options).to_json();
    const auto b = verify_theorems(Catalog::generate(8), options).to_json();
    EXPECT_EQ(a, b);
}
