#include <gtest/gtest.h>

#include <set>

#include "mcone/embedding.hpp"
#include "mcone/errors.hpp"
#include "mcone/polyhedra.hpp"
#include "support.hpp"

namespace mcone {
namespace {

std::vector<Embedding> sample_embeddings() {
    const auto g2 = RootDatum::from_type("G2");
    const auto a2 = RootDatum::from_type("A2");
    const auto b2 = RootDatum::from_type("B2");
    return {testing::g2_contains_a2().make_compatible(),
            diagonal_embedding(g2, 2).make_compatible(),
            diagonal_embedding(RootDatum::from_type("A1"), 3).make_compatible(),
            sl2_embedding(a2, {2, 2}).make_compatible(),
            sl2_embedding(b2, {2, 2}).make_compatible(),
            sl2_embedding(RootDatum::from_type("A1xA1xA1"), {2, 2, 2}).make_compatible(),
            sl2_embedding(a2, {1, 1}).make_compatible(),
            torus_embedding(g2).make_compatible(),
            embedding_from_matrix(RootDatum::from_type("A1"), a2, QMat::from_rows({{1, 1}}, 2)).make_compatible()};
}

TEST(Embedding, PlethysmPullbackMatrix) {
    const auto e = testing::plethysm_a2().make_compatible();
    const std::vector<std::vector<int>> expected = {{2, 5, 5, 6, 7, 5, 7, 6, 5, 5, 5, 2, 3, 1},
                                                    {1, 0, 2, 2, 2, 5, 3, 4, 5, 4, 3, 5, 2, 2}};
    const QMat& m = e.pullback_matrix();
    ASSERT_EQ(m.rows(), 2u);
    ASSERT_EQ(m.cols(), 15u);  // 14 semisimple coordinates and the central one
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 14; ++j) EXPECT_EQ(m(i, j), expected[i][j]) << i << "," << j;
}

TEST(Embedding, PlethysmKilledRootsCubiclesAndLift) {
    const auto e = testing::plethysm_a2().make_compatible();
    const auto& t = e.target();
    EXPECT_EQ(e.bar_simple(), (std::vector<int>{3, 7, 9}));
    EXPECT_EQ(e.bar_roots().size(), 3u);

    std::set<std::pair<int, std::string>> cubicles;
    for (const auto& c : e.cubicles()) cubicles.emplace(c.v.length(), t.cycle_notation(c.v));
    const std::set<std::pair<int, std::string>> expected = {
        {0, "1"},
        {2, "(6 7)(12 13)"},
        {8, "(2 3)(4 6 5)(7 8 9)(10 12 11)(13 14)"},
        {10, "(2 3 6 5 4)(7 8 9 12 11 10)(13 14)"}};
    EXPECT_EQ(cubicles, expected);

    EXPECT_EQ(t.cycle_notation(e.lift().simple_images[0]), "(1 6)(2 12)(4 8)(5 9)(7 14)(13 15)");
    EXPECT_EQ(t.cycle_notation(e.lift().simple_images[1]), "(1 2)(3 7)(6 13)(8 10)(9 11)(12 15)");
    EXPECT_EQ(t.cycle_notation(e.lift().longest_image), "(1 15)(2 13)(3 14)(4 10)(5 11)(6 12)");
}

TEST(Embedding, PlethysmDualsLandInRelativeWeylCosets) {
    const auto e = testing::plethysm_a2().make_compatible();
    const auto& t = e.target();
    std::set<std::string> duals;
    for (const auto& c : e.cubicles()) duals.insert(t.cycle_notation(e.dual_target(c.v)));
    EXPECT_TRUE(duals.count("(2 3 6 4)(7 9 12 10)(13 14)"));
    EXPECT_TRUE(duals.count("(2 3)(4 6)(7 9)(10 12)(13 14)"));
    // every dual lies in W_bar v' for some v' in the relative Weyl set
    const auto rel = e.relative_weyl_set();
    for (const auto& c : e.cubicles()) {
        const auto dual = e.dual_target(c.v);
        const auto rep = t.min_coset_rep(dual, e.bar_simple(), CosetSide::Left);
        EXPECT_NE(std::find(rel.begin(), rel.end(), rep), rel.end()) << t.cycle_notation(dual);
    }
}

TEST(Embedding, IdentityHasOneCubicleAndTrivialLift) {
    const auto g2 = RootDatum::from_type("G2");
    const auto e = identity_embedding(g2).make_compatible();
    ASSERT_EQ(e.cubicles().size(), 1u);
    EXPECT_EQ(e.cubicles()[0].v, g2.identity());
    for (int i = 0; i < 2; ++i) EXPECT_EQ(e.lift().simple_images[static_cast<std::size_t>(i)], g2.simple_reflection(i));
}

TEST(Embedding, DiagonalRelativeWeylSetIsTrivial) {
    const auto e = diagonal_embedding(RootDatum::from_type("G2"), 2).make_compatible();
    ASSERT_EQ(e.relative_weyl_set().size(), 1u);
    EXPECT_EQ(e.relative_weyl_set()[0].length(), 0);
}

TEST(Embedding, G2OverA2HasTwoCubicles) {
    const auto e = testing::g2_contains_a2().make_compatible();
    std::vector<std::string> vs;
    for (const auto& c : e.cubicles()) vs.push_back(word_to_string(c.v.word()));
    EXPECT_EQ(vs, (std::vector<std::string>{"1", "s1"}));
    EXPECT_EQ(e.all_rays().size(), 3u);
}

TEST(Embedding, CompatibilityIsIdempotent) {
    for (const auto& e : sample_embeddings()) {
        EXPECT_TRUE(e.is_compatible()) << e.description();
        const auto again = e.make_compatible();
        EXPECT_EQ(again.pullback_matrix(), e.pullback_matrix()) << e.description();
    }
}

TEST(Embedding, LiftIsAHomomorphismIntertwiningPush) {
    testing::Rng rng(31);
    for (const auto& e : sample_embeddings()) {
        const auto& s = e.source();
        const auto& t = e.target();
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = testing::random_element(rng, s);
            const auto b = testing::random_element(rng, s);
            EXPECT_EQ(e.lift_element(s.multiply(a, b)), t.multiply(e.lift_element(a), e.lift_element(b)));
            const QVec xi = testing::random_vector(rng, static_cast<std::size_t>(s.dim()), 7);
            EXPECT_EQ(e.push(s.act_coweight(a, xi)), t.act_coweight(e.lift_element(a), e.push(xi))) << e.description();
        }
        EXPECT_EQ(e.lift_element(s.longest()), e.lift().longest_image);
    }
}

// Two routes to each cubicle: its stored rays against the inequality description v t_+ cut by the source chamber.
TEST(Embedding, CubicleRaysMatchInequalityDescription) {
    for (const auto& e : sample_embeddings()) {
        const auto& s = e.source();
        const auto& t = e.target();
        const auto n = static_cast<std::size_t>(s.dim());
        for (const auto& c : e.cubicles()) {
            std::vector<QVec> rows;
            for (int i = 0; i < t.rank(); ++i) rows.push_back(e.pull(t.act_weight(c.v, t.simple_root(i))));
            for (int i = 0; i < s.rank(); ++i) rows.push_back(s.simple_root(i));
            const Cone direct = cone_from_inequalities(rows, {}, n);
            const Cone stored = cone_from_generators(c.rays, c.lineality, n);
            EXPECT_EQ(direct, stored) << e.description() << " v=" << word_to_string(c.v.word());
            // and the cubicle is the dual of the cone spanned by the pulled-back roots
            EXPECT_EQ(dualize(cone_from_generators(c.dual_generators, {}, n)),
                      cone_from_generators(c.rays, c.lineality, n));
        }
    }
}

TEST(Embedding, GenericPointsLieInExactlyOneCubicle) {
    testing::Rng rng(32);
    for (const auto& e : sample_embeddings()) {
        const auto& s = e.source();
        for (int trial = 0; trial < 25; ++trial) {
            QVec xi(static_cast<std::size_t>(s.dim()));
            for (auto& x : xi) x = Rational(rng.uniform(1, 97)) / rng.uniform(1, 13);
            if (!e.is_generic(xi) || !s.is_dominant_coweight(xi)) continue;
            EXPECT_EQ(e.cubicles_containing(xi).size(), 1u) << e.description() << " " << to_string(xi);
        }
    }
}

TEST(Embedding, RelativeWeylSetElementsMeetTheBarBase) {
    for (const auto& e : sample_embeddings()) {
        const auto& t = e.target();
        for (const auto& v : e.relative_weyl_set())
            EXPECT_EQ(t.min_coset_rep(v, e.bar_simple(), CosetSide::Left), v) << e.description();
    }
}

TEST(Embedding, RejectsMismatchedMatrices) {
    EXPECT_THROW(embedding_from_matrix(RootDatum::from_type("A1"), RootDatum::from_type("A2"), QMat(2, 2)), ConfigError);
    EXPECT_THROW(sl2_embedding(RootDatum::from_type("A2"), {3, 0}), ConfigError);
    EXPECT_THROW(diagonal_embedding(RootDatum::from_type("A2"), 0), ConfigError);
}

}  // namespace
}  // namespace mcone
