#include <gtest/gtest.h>

#include "mcone/errors.hpp"
#include "mcone/polyhedra.hpp"
#include "support.hpp"

namespace mcone {
namespace {

using testing::Rng;

TEST(Cones, G2PositiveRootsSpanTheSimpleRootCone) {
    const auto g2 = RootDatum::from_type("G2");
    std::vector<QVec> roots;
    for (const auto& r : g2.positive_roots()) roots.push_back(r.weight);
    const Cone c = cone_from_generators(roots, {}, 2);
    EXPECT_EQ(c.rays.size(), 2u);
    EXPECT_TRUE(c.is_pointed());
    for (int i = 0; i < 2; ++i)
        EXPECT_NE(std::find(c.rays.begin(), c.rays.end(), primitive(g2.simple_root(i))), c.rays.end());
}

TEST(Cones, OrthantFacetsAndLineality) {
    const Cone half = cone_from_inequalities({unit(3, 0)}, {}, 3);
    EXPECT_EQ(half.rays.size(), 1u);
    EXPECT_EQ(half.lineality.size(), 2u);
    const Cone orthant = cone_from_inequalities({unit(3, 0), unit(3, 1), unit(3, 2)}, {}, 3);
    EXPECT_EQ(orthant.rays.size(), 3u);
    EXPECT_EQ(facet_rows(orthant).size(), 3u);
    const Cone line = cone_from_inequalities({}, {unit(2, 0)}, 2);
    EXPECT_TRUE(line.rays.empty());
    EXPECT_EQ(line.lineality, (std::vector<QVec>{{0, 1}}));
}

TEST(Cones, DimensionBoundIsEnforced) {
    EXPECT_THROW(cone_from_inequalities({}, {}, 12), ResourceError);
}

// Double dualization returns the cone, and membership by generators agrees with membership by facets.
TEST(Cones, DualityRoundTripAndMembershipRoutes) {
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
        std::vector<QVec> gens;
        const int count = rng.uniform(1, 6);
        for (int k = 0; k < count; ++k) gens.push_back(testing::random_vector(rng, n, 3));
        const Cone c = cone_from_generators(gens, {}, n);
        EXPECT_EQ(dualize(dualize(c)), c);
        for (const auto& g : gens) EXPECT_TRUE(contains_by_facets(c, g));
        for (int probe = 0; probe < 8; ++probe) {
            const QVec x = testing::random_vector(rng, n, 4);
            EXPECT_EQ(contains_by_generators(c, x), contains_by_facets(c, x)) << to_string(x);
        }
    }
}

TEST(Systems, RowsArePrimitiveAndMerged) {
    InequalitySystem s({"a", "b"});
    s.add({2, 4}, 6, {"chamber", {}, {}, {}, {}});
    s.add({1, 2}, 3, {"triple", {0}, {}, {}, {}});
    s.add({0, 0}, -1, {"triple", {}, {}, {}, {}});
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s.rows()[0].coeffs, (QVec{1, 2}));
    EXPECT_EQ(s.rows()[0].rhs, 3);
    EXPECT_EQ(s.rows()[0].provenance.size(), 2u);
    s.add_equality({1, -1}, 0, {"center-equality", {}, {}, {}, {}});
    EXPECT_EQ(s.size(), 3u);
    EXPECT_TRUE(s.satisfies({1, 1}));
    EXPECT_FALSE(s.satisfies({1, 2}));
    EXPECT_EQ(s.tight_rows({1, 1}).size(), 3u);
}

TEST(Systems, ImplicationCertificatesAndPruning) {
    InequalitySystem s({"x", "y"});
    const Provenance p{"triple", {}, {}, {}, {}};
    s.add({1, 0}, 0, p);
    s.add({0, 1}, 0, p);
    s.add({1, 1}, -1, p);  // implied by the first two
    s.add({2, 1}, 0, p);   // implied as well
    const PruneResult pruned = prune_redundant(s);
    EXPECT_EQ(pruned.system.size(), 2u);
    ASSERT_EQ(pruned.removed.size(), 2u);
    for (const auto& r : pruned.removed) EXPECT_TRUE(verify_certificate(pruned.system.rows(), r.row, r.multipliers));
    EXPECT_TRUE(systems_equivalent(s, pruned.system));

    Inequality bogus{{-1, 0}, 0, {}};
    EXPECT_FALSE(implication_certificate(pruned.system.rows(), bogus).has_value());
    EXPECT_FALSE(verify_certificate(pruned.system.rows(), bogus, {1, 0}));
}

TEST(Systems, EquivalenceDetectsDifferences) {
    InequalitySystem a({"x"});
    InequalitySystem b({"x"});
    a.add({1}, 0, {});
    b.add({1}, 1, {});
    EXPECT_FALSE(systems_equivalent(a, b));
    b.add({1}, 0, {});
    EXPECT_FALSE(systems_equivalent(a, b));
    a.add({1}, 1, {});
    EXPECT_TRUE(systems_equivalent(a, b));
}

TEST(Vertices, SquareTriangleAndUnboundedRegion) {
    const std::vector<LinearConstraint> square = {{{1, 0}, Relation::Ge, 0}, {{1, 0}, Relation::Le, 1},
                                                  {{0, 1}, Relation::Ge, 0}, {{0, 1}, Relation::Le, 1}};
    const auto sq = vertex_enumeration(square, 2);
    EXPECT_TRUE(sq.bounded);
    EXPECT_EQ(sq.vertices, (std::vector<QVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));

    auto cut = square;
    cut.push_back({{1, 1}, Relation::Le, Rational(3, 2)});
    EXPECT_EQ(vertex_enumeration(cut, 2).vertices.size(), 5u);

    const auto open = vertex_enumeration({{{1, 0}, Relation::Ge, 0}, {{0, 1}, Relation::Ge, 0}}, 2);
    EXPECT_FALSE(open.bounded);
    EXPECT_EQ(open.vertices, (std::vector<QVec>{{0, 0}}));
    EXPECT_EQ(open.recession_rays.size(), 2u);

    EXPECT_TRUE(vertex_enumeration({{{1}, Relation::Ge, 1}, {{1}, Relation::Le, 0}}, 1).empty);
}

TEST(Monoids, KnownMembership) {
    const auto a2 = RootDatum::from_type("A2");
    std::vector<IVec> roots;
    for (const auto& r : a2.positive_roots()) roots.push_back(to_ivec(r.weight));
    EXPECT_EQ(monoid_member(roots, {1, 1}, 1000).status, Membership::Yes);
    EXPECT_EQ(monoid_member(roots, {1, 0}, 1000).status, Membership::No);
    EXPECT_EQ(monoid_member({{2, 0}, {0, 2}}, {1, 2}, 1000).status, Membership::No);
    EXPECT_EQ(monoid_member({{1, 0}, {0, 1}}, {40, 40}, 3).status, Membership::Unknown);
}

// Brute force over bounded coefficient boxes as the second route to monoid membership.
TEST(Monoids, SearchAgreesWithBruteForce) {
    Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<IVec> gens;
        const int count = rng.uniform(1, 3);
        for (int k = 0; k < count; ++k) gens.push_back({rng.uniform(1, 4), rng.uniform(-2, 3)});
        const IVec x{rng.uniform(0, 10), rng.uniform(-4, 8)};
        bool reachable = false;
        const int limit = 10;  // first coordinates are >= 1, so no coefficient exceeds 10
        std::vector<int> c(gens.size(), 0);
        for (;;) {
            IVec sum{0, 0};
            for (std::size_t k = 0; k < gens.size(); ++k)
                for (std::size_t i = 0; i < 2; ++i) sum[i] += c[k] * gens[k][i];
            reachable = reachable || sum == x;
            std::size_t k = 0;
            while (k < c.size() && c[k] == limit) c[k++] = 0;
            if (k == c.size()) break;
            ++c[k];
        }
        const auto r = monoid_member(gens, x, 100000);
        EXPECT_EQ(r.status, reachable ? Membership::Yes : Membership::No);
        if (r.status == Membership::Yes) {
            IVec sum{0, 0};
            for (std::size_t k = 0; k < gens.size(); ++k)
                for (std::size_t i = 0; i < 2; ++i) sum[i] += r.coefficients[k] * gens[k][i];
            EXPECT_EQ(sum, x);
        }
    }
}

}  // namespace
}  // namespace mcone
