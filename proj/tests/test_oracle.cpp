#include <gtest/gtest.h>

#include "mcone/errors.hpp"
#include "mcone/oracle.hpp"
#include "support.hpp"

namespace mcone {
namespace {

std::map<IVec, std::int64_t> as_map(const Character& c) { return c.multiplicities; }

TEST(Oracle, PlethysmModuleHasThreeDoubleWeights) {
    const auto a2 = RootDatum::from_type("A2");
    const Character c = weight_multiplicities(a2, {2, 1});
    EXPECT_EQ(c.dimension(), 15);
    std::vector<IVec> doubles;
    for (const auto& [w, m] : c.multiplicities) {
        EXPECT_LE(m, 2);
        if (m == 2) doubles.push_back(w);
    }
    EXPECT_EQ(doubles, (std::vector<IVec>{{-1, 1}, {0, -1}, {1, 0}}));
}

TEST(Oracle, TrivialAndSl2Characters) {
    const auto a1 = RootDatum::from_type("A1");
    EXPECT_EQ(weight_multiplicities(a1, {0}).dimension(), 1);
    for (std::int64_t n = 0; n <= 9; ++n) {
        const Character c = weight_multiplicities(a1, {n});
        EXPECT_EQ(c.multiplicities.size(), static_cast<std::size_t>(n + 1));
        for (const auto& [w, m] : c.multiplicities) EXPECT_EQ(m, 1);
    }
}

TEST(Oracle, WeylDimensionsOfFundamentalModules) {
    EXPECT_EQ(weyl_dimension(RootDatum::from_type("G2"), {1, 0}), 7);
    EXPECT_EQ(weyl_dimension(RootDatum::from_type("G2"), {0, 1}), 14);
    EXPECT_EQ(weyl_dimension(RootDatum::from_type("B3"), {0, 0, 1}), 8);
    EXPECT_EQ(weyl_dimension(RootDatum::from_type("F4"), {0, 0, 0, 1}), 26);
    EXPECT_EQ(weyl_dimension(RootDatum::from_type("A2"), {2, 1}), 15);
}

// Freudenthal against Kostant's alternating partition-function sum.
TEST(Oracle, FreudenthalAgreesWithKostant) {
    testing::Rng rng(61);
    for (const char* type : {"A2", "B2", "G2", "A3", "C3"}) {
        const auto d = RootDatum::from_type(type);
        for (int trial = 0; trial < 4; ++trial) {
            const IVec lambda = testing::random_dominant(rng, d, 3);
            EXPECT_EQ(as_map(weight_multiplicities(d, lambda)), testing::kostant_character(d, lambda))
                << type << " " << to_string(to_qvec(lambda));
        }
    }
}

TEST(Oracle, CharactersAreWeylInvariant) {
    testing::Rng rng(62);
    for (const char* type : {"B2", "G2", "A3"}) {
        const auto d = RootDatum::from_type(type);
        const IVec lambda = testing::random_dominant(rng, d, 4);
        const Character c = weight_multiplicities(d, lambda);
        for (int i = 0; i < d.rank(); ++i)
            for (const auto& [w, m] : c.multiplicities)
                EXPECT_EQ(c.multiplicity(to_ivec(d.act_weight(d.simple_reflection(i), to_qvec(w)))), m);
    }
}

TEST(Oracle, G2TensorExamples) {
    const auto g2 = RootDatum::from_type("G2");
    EXPECT_EQ(tensor_multiplicity(g2, {1, 0}, {0, 1}, {0, 1}), 0);
    EXPECT_GE(tensor_multiplicity(g2, {3, 0}, {0, 3}, {0, 3}), 1);
    EXPECT_EQ(testing::brauer_klimyk(g2, {0, 1}, {1, 0}).count({0, 1}), 0u);
    EXPECT_GE((testing::brauer_klimyk(g2, {0, 3}, {3, 0})[{0, 3}]), 1);
}

TEST(Oracle, Sl2ClebschGordan) {
    const auto a1 = RootDatum::from_type("A1");
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (int c = 0; c <= 10; ++c)
                EXPECT_EQ(tensor_multiplicity(a1, {a}, {b}, {c}), testing::clebsch_gordan(a, b, c)) << a << b << c;
}

// Library decomposition of tensor products against Brauer-Klimyk, with dimension bookkeeping.
TEST(Oracle, TensorProductsAgreeWithBrauerKlimyk) {
    testing::Rng rng(63);
    for (const char* type : {"A2", "B2", "G2"}) {
        const auto d = RootDatum::from_type(type);
        const auto diag = diagonal_embedding(d, 2);
        const BranchingOracle oracle(diag);
        for (int trial = 0; trial < 6; ++trial) {
            const IVec a = testing::random_dominant(rng, d, 3);
            const IVec b = testing::random_dominant(rng, d, 3);
            IVec joined;
            for (int i = 0; i < d.rank(); ++i) joined.push_back(a[static_cast<std::size_t>(i)]);
            for (int i = 0; i < d.rank(); ++i) joined.push_back(b[static_cast<std::size_t>(i)]);
            const auto& lib = oracle.branching(joined);
            EXPECT_EQ(lib, testing::brauer_klimyk(d, a, b)) << type;
            BigInt total = 0;
            for (const auto& [nu, m] : lib) total += weyl_dimension(d, nu) * m;
            EXPECT_EQ(total, weyl_dimension(d, a) * weyl_dimension(d, b));
        }
    }
}

TEST(Oracle, BranchingAgreesWithAlternatingSum) {
    testing::Rng rng(64);
    const std::vector<Embedding> embeddings = {testing::g2_contains_a2().make_compatible(),
                                               sl2_embedding(RootDatum::from_type("B2"), {2, 2}).make_compatible(),
                                               sl2_embedding(RootDatum::from_type("A2"), {1, 1}).make_compatible()};
    for (const auto& e : embeddings) {
        const BranchingOracle oracle(e);
        for (int trial = 0; trial < 6; ++trial) {
            const IVec lambda = testing::random_dominant(rng, e.target(), 4);
            EXPECT_EQ(oracle.branching(lambda), testing::branching_by_alternation(e, lambda)) << e.description();
        }
    }
}

TEST(Oracle, G2InA2RestrictionOfAdjoint) {
    const BranchingOracle oracle(testing::g2_contains_a2().make_compatible());
    const std::map<IVec, std::int64_t> expected = {{{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}};
    EXPECT_EQ(oracle.branching({0, 1}), expected);
    EXPECT_EQ(oracle.multiplicity({1, 1}, {0, 1}), 1);
}

TEST(Oracle, ConstituentWeightsAppearInTheRestriction) {
    const auto e = testing::g2_contains_a2().make_compatible();
    const BranchingOracle oracle(e);
    const IVec lambda{2, 1};
    const Character restricted = restrict_character(e, weight_multiplicities(e.target(), lambda));
    for (const auto& [mu, m] : oracle.branching(lambda))
        for (const auto& [w, k] : weight_multiplicities(e.source(), mu).multiplicities)
            EXPECT_GE(restricted.multiplicity(w), k);
}

TEST(Oracle, SaturationScanOnTheG2Pair) {
    const BranchingOracle oracle(diagonal_embedding(RootDatum::from_type("G2"), 2));
    const ScanResult scan = saturation_scan(oracle, {0, 1}, {1, 0, 0, 1}, 3);
    ASSERT_TRUE(scan.first.has_value());
    EXPECT_EQ(*scan.first, 2);
    ASSERT_EQ(scan.tried.size(), 2u);
    EXPECT_EQ(scan.tried[0], (std::pair<int, std::int64_t>{1, 0}));
    // the doubled pair is already positive, by an independent route as well
    EXPECT_GE((testing::brauer_klimyk(RootDatum::from_type("G2"), {2, 0}, {0, 2})[{0, 2}]), 1);
}

TEST(Oracle, ScanSkipsNonIntegralMultiples) {
    const BranchingOracle oracle(diagonal_embedding(RootDatum::from_type("A1"), 2));
    const ScanResult scan = saturation_scan(oracle, {Rational(1, 2)}, {Rational(1, 2), 0}, 4);
    ASSERT_TRUE(scan.first.has_value());
    EXPECT_EQ(*scan.first, 2);
    for (const auto& [n, m] : scan.tried) EXPECT_EQ(n % 2, 0);
}

TEST(Oracle, OutsidePointsNeverOccur) {
    const BranchingOracle oracle(diagonal_embedding(RootDatum::from_type("A1"), 2));
    EXPECT_FALSE(saturation_scan(oracle, {5}, {1, 1}, 6).first.has_value());
}

TEST(Oracle, BudgetIsEnforced) {
    EXPECT_THROW(weight_multiplicities(RootDatum::from_type("G2"), {8, 8}, 1000), ResourceError);
}

}  // namespace
}  // namespace mcone
