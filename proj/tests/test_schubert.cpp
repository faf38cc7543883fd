#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "mcone/errors.hpp"
#include "mcone/schubert.hpp"
#include "support.hpp"

namespace mcone {
namespace {

// Chevalley's rule evaluated directly from the root data: sigma_{s_i} sigma_w is the sum over
// positive roots beta with l(w s_beta) = l(w) + 1 of <pi_i, beta^vee> sigma_{w s_beta}.
CohomologyClass chevalley_by_roots(const RootDatum& d, int i, const WeylElement& w) {
    CohomologyClass out;
    for (const auto& beta : d.positive_roots()) {
        const WeylElement x = d.multiply(w, d.reflection(beta));
        if (x.length() != w.length() + 1) continue;
        const Rational c = dot(d.fundamental_weight(i), beta.coroot);
        if (sgn(c) != 0) out.add(x, c);
    }
    return out;
}

TEST(Schubert, G2PowersOfDivisorClasses) {
    const auto g2 = RootDatum::from_type("G2");
    const SchubertCalculus s(g2);
    const std::vector<std::string> k1 = {"s2s1", "2*s1s2s1", "2*s2s1s2s1", "2*s1s2s1s2s1"};
    const std::vector<std::string> k2 = {"3*s1s2", "6*s2s1s2", "18*s1s2s1s2", "18*s2s1s2s1s2"};
    for (int i = 0; i < 2; ++i) {
        const auto& expected = i == 0 ? k1 : k2;
        const CohomologyClass divisor = s.schubert(g2.simple_reflection(i));
        // restrict to the Grassmannian: keep the classes indexed by minimal coset representatives
        const auto reps = g2.coset_reps({1 - i});
        CohomologyClass power = divisor;
        for (std::size_t k = 0; k < expected.size(); ++k) {
            power = s.multiply(power, divisor);
            CohomologyClass projected;
            for (const auto& [w, c] : power.terms())
                if (std::find(reps.begin(), reps.end(), w) != reps.end()) projected.add(w, c);
            EXPECT_EQ(projected.to_string(), expected[k]) << "s" << i + 1 << "^" << k + 2;
        }
        EXPECT_TRUE(s.multiply(power, divisor).is_zero());
    }
}

TEST(Schubert, A3MonkRule) {
    const SchubertCalculus s(RootDatum::from_type("A3"));
    const auto x = s.schubert(s.datum().simple_reflection(1));
    EXPECT_EQ(s.multiply(x, x).to_string(), "s1s2 + s3s2");
}

TEST(Schubert, ExtractionCalibratesEveryRepresentative) {
    for (const char* type : {"A1", "A2", "B2", "G2", "A1xA1", "A3"}) {
        const SchubertCalculus s(RootDatum::from_type(type));
        for (const auto& w : s.datum().elements()) {
            const Polynomial p = s.representative(w);
            EXPECT_EQ(p.degree(), w.length()) << type;
            EXPECT_EQ(s.extract(p), s.schubert(w)) << type << " " << word_to_string(w.word());
        }
    }
}

TEST(Schubert, DividedDifferencesStepDownOrVanish) {
    for (const char* type : {"A2", "B2", "G2"}) {
        const SchubertCalculus s(RootDatum::from_type(type));
        const auto& d = s.datum();
        for (const auto& w : d.elements())
            for (int i = 0; i < d.rank(); ++i) {
                const Polynomial image = s.divided_difference(i, s.representative(w));
                if (d.is_right_descent(w, i))
                    EXPECT_EQ(image, s.representative(d.multiply(w, d.simple_reflection(i))));
                else
                    EXPECT_TRUE(image.is_zero());
            }
    }
}

TEST(Schubert, ChevalleyRuleMatchesPolynomialProduct) {
    for (const char* type : {"A2", "B2", "G2", "A3", "B3"}) {
        const SchubertCalculus s(RootDatum::from_type(type));
        const auto& d = s.datum();
        for (const auto& w : d.elements())
            for (int i = 0; i < d.rank(); ++i) {
                const auto expected = chevalley_by_roots(d, i, w);
                EXPECT_EQ(s.multiply(s.schubert(d.simple_reflection(i)), s.schubert(w)), expected) << type;
                EXPECT_EQ(s.chevalley(d.fundamental_weight(i), s.schubert(w)), expected) << type;
            }
    }
}

TEST(Schubert, LongestElementSignLaw) {
    for (const char* type : {"A2", "B2", "G2", "A3", "C3"}) {
        const SchubertCalculus s(RootDatum::from_type(type));
        const auto& d = s.datum();
        const auto w0 = d.longest();
        for (const auto& w : d.elements()) {
            const auto conj = d.multiply(d.multiply(w0, w), w0);
            const Rational sign = w.length() % 2 == 0 ? 1 : -1;
            EXPECT_EQ(s.act(w0, s.schubert(w)), s.schubert(conj).scaled(sign)) << type << " " << word_to_string(w.word());
        }
    }
}

TEST(Schubert, ClassActionAgreesWithPolynomialAction) {
    const SchubertCalculus s(RootDatum::from_type("B2"));
    for (const auto& w : s.datum().elements())
        for (const auto& u : s.datum().elements())
            EXPECT_EQ(s.act(w, s.schubert(u)), s.extract(s.act(w, s.representative(u))));
}

TEST(Schubert, G2GrassmannianTriplesForFirstParabolic) {
    const auto g2 = RootDatum::from_type("G2");
    const SchubertCalculus s(g2);
    const auto reps = g2.coset_reps({1});
    const WeylElement& top = reps.back();
    std::set<std::multiset<std::string>> found;
    std::map<std::multiset<std::string>, Rational> multiplicity;
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = a; b < reps.size(); ++b)
            for (std::size_t c = b; c < reps.size(); ++c) {
                if (reps[a].length() + reps[b].length() + reps[c].length() != top.length()) continue;
                const auto product = s.multiply(s.multiply(s.schubert(reps[a]), s.schubert(reps[b])), s.schubert(reps[c]));
                const Rational coeff = product.coefficient(top);
                if (sgn(coeff) == 0) continue;
                std::multiset<std::string> key{word_to_string(reps[a].word()), word_to_string(reps[b].word()),
                                               word_to_string(reps[c].word())};
                found.insert(key);
                multiplicity[key] = coeff;
            }
    const std::set<std::multiset<std::string>> expected = {{"1", "1", "s1s2s1s2s1"},
                                                           {"1", "s1", "s2s1s2s1"},
                                                           {"1", "s2s1", "s1s2s1"},
                                                           {"s1", "s1", "s1s2s1"},
                                                           {"s1", "s2s1", "s2s1"}};
    EXPECT_EQ(found, expected);
    EXPECT_GT((multiplicity[{"s1", "s2s1", "s2s1"}]), 1);
}

TEST(Schubert, G2OverA2ScalarPairs) {
    const auto e = testing::g2_contains_a2().make_compatible();
    const RelativeCalculus rc(e);
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> lists;
    for (const auto& ray : e.all_rays()) {
        const RayData data = rc.ray_data(ray);
        if (data.v.length() != 0) continue;
        auto& list = lists[to_string(ray)];
        for (const auto& p : rc.scalar_pairs(data)) {
            list.emplace_back(word_to_string(p.utilde.word()), word_to_string(p.u.word()));
            EXPECT_EQ(p.coefficient, 1);
        }
        std::sort(list.begin(), list.end());
    }
    using Pairs = std::vector<std::pair<std::string, std::string>>;
    Pairs first = {{"1", "1"}, {"s1", "s1"}, {"s2s1", "s2s1"}};
    Pairs second = {{"1", "1"}, {"s1", "s2"}, {"s2", "s2"}, {"s1s2", "s1s2"}, {"s2s1", "s1s2"}, {"s1s2s1", "s2s1s2"}};
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());
    EXPECT_EQ(lists["(2, 1)"], first);
    EXPECT_EQ(lists["(1, 1)"], second);
}

TEST(Schubert, PhiStarOfIdentityIsIdentity) {
    const auto g2 = RootDatum::from_type("G2");
    const auto e = identity_embedding(g2).make_compatible();
    const SchubertCalculus s(g2);
    for (const auto& w : g2.elements()) EXPECT_EQ(phi_star(e, s, s, s.schubert(w)), s.schubert(w));
}

TEST(Schubert, DiagonalPullbackIsCupProduct) {
    const auto a2 = RootDatum::from_type("A2");
    const auto e = diagonal_embedding(a2, 2).make_compatible();
    const SchubertCalculus source(a2);
    const SchubertCalculus target(e.target());
    for (const auto& a : a2.elements())
        for (const auto& b : a2.elements()) {
            Word word = a.word();
            for (int letter : b.word()) word.push_back(letter + 2);
            const auto pulled = phi_star(e, source, target, target.schubert(e.target().from_word(word)));
            EXPECT_EQ(pulled, source.multiply(source.schubert(a), source.schubert(b)));
        }
}

TEST(Schubert, GroupBoundIsEnforced) {
    EXPECT_THROW(SchubertCalculus(RootDatum::from_type("A6"), 1500), ResourceError);
}

TEST(Schubert, CacheRoundTripAndFingerprintGuard) {
    const auto dir = std::filesystem::temp_directory_path() / "mcone_schubert_cache_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "g2.json").string();
    const SchubertCalculus g2(RootDatum::from_type("G2"));
    for (const auto& w : g2.datum().elements()) g2.representative(w);
    g2.save_cache(path);

    const SchubertCalculus fresh(RootDatum::from_type("G2"));
    EXPECT_TRUE(fresh.load_cache(path));
    for (const auto& w : g2.datum().elements()) EXPECT_EQ(fresh.representative(w), g2.representative(w));

    const SchubertCalculus other(RootDatum::from_type("B2"));
    EXPECT_FALSE(other.load_cache(path));
    EXPECT_FALSE(other.load_cache((dir / "missing.json").string()));
    std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace mcone
