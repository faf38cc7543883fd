#pragma once

// Rational Schubert calculus of full flag varieties through polynomial representatives:
// divided differences, the top class normalization, Schubert expansion by extraction,
// the Chevalley formula, the Weyl group action on classes and restriction along an embedding.
//
// Polynomials live in the coweight coordinates X_k of the datum; a weight is the linear form
// sum_k weight_k X_k.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mcone/embedding.hpp"
#include "mcone/polynomial.hpp"
#include "mcone/rootdata.hpp"

namespace mcone {

inline constexpr std::size_t kDefaultSchubertBound = 1500;  // Weyl group order
inline constexpr int kSchubertCacheVersion = 1;

class CohomologyClass {
public:
    void add(const WeylElement& w, const Rational& c);
    Rational coefficient(const WeylElement& w) const;
    const std::map<WeylElement, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CohomologyClass operator+(const CohomologyClass& o) const;
    CohomologyClass operator-(const CohomologyClass& o) const;
    CohomologyClass scaled(const Rational& c) const;
    CohomologyClass degree_part(int length) const;
    bool operator==(const CohomologyClass& o) const = default;

    std::string to_string() const;  // e.g. "18*s1s2s1s2 + s2"

private:
    std::map<WeylElement, Rational> terms_;  // no zero coefficients
};

class SchubertCalculus {
public:
    // Verifies the top class and degree-one calibration; aborts with ConsistencyError on mismatch.
    explicit SchubertCalculus(RootDatum datum, std::size_t group_bound = kDefaultSchubertBound);

    const RootDatum& datum() const { return datum_; }
    std::size_t nvars() const { return static_cast<std::size_t>(datum_.dim()); }

    Polynomial weight_form(const QVec& weight) const { return Polynomial::linear(weight); }
    Polynomial reflect(int i, const Polynomial& p) const;
    // (w.p)(xi) = p(w^{-1} xi)
    Polynomial act(const WeylElement& w, const Polynomial& p) const;
    Polynomial divided_difference(int i, const Polynomial& p) const;

    // P_{w0} = prod of positive roots / |W|, then divided differences down to w.
    Polynomial representative(const WeylElement& w) const;
    Polynomial representative(const CohomologyClass& x) const;
    CohomologyClass extract(const Polynomial& p) const;

    CohomologyClass schubert(const WeylElement& w) const;
    CohomologyClass theta(const QVec& weight) const;
    CohomologyClass chevalley(const QVec& weight, const CohomologyClass& x) const;
    CohomologyClass act(const WeylElement& w, const CohomologyClass& x) const;
    CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b) const;

    // Disk memo of representatives keyed by format version and datum fingerprint.
    void save_cache(const std::string& path) const;
    // Returns false (and leaves the memo untouched) on any mismatch or parse failure.
    bool load_cache(const std::string& path) const;

private:
    CohomologyClass reflect_class(int i, const CohomologyClass& x) const;

    RootDatum datum_;
    mutable std::mutex memo_mutex_;
    mutable std::map<WeylElement, Polynomial> memo_;
};

// Restriction of a target class to the source flag variety along the embedding.
CohomologyClass phi_star(const Embedding& e, const SchubertCalculus& source, const SchubertCalculus& target,
                         const CohomologyClass& x);

enum class PairingVariant { Cone, Polytope };

struct QualifyingTriple {
    WeylElement wtilde;
    WeylElement w;
    WeylElement v;
    Rational coefficient;
};

// Data attached to a ray of the cubicle subdivision.
struct RayData {
    QVec ray;
    WeylElement v;                 // first cubicle (canonical order) containing the ray
    std::vector<int> source_face;  // source simple roots vanishing on the ray
    std::vector<int> target_face;  // target simple roots vanishing on v^{-1} push(ray)
};

struct ScalarPair {
    WeylElement wtilde;
    WeylElement w;
    WeylElement utilde;  // minimal representative of w~0 w~ modulo the source face
    WeylElement u;       // minimal representative of w v modulo the target face
    Rational coefficient;
};

class RelativeCalculus {
public:
    explicit RelativeCalculus(Embedding e, std::size_t group_bound = kDefaultSchubertBound);

    const Embedding& embedding() const { return embedding_; }
    const SchubertCalculus& source() const { return *source_; }
    const SchubertCalculus& target() const { return *target_; }

    // phi^*(v . sigma_u), memoized per (v, u).
    CohomologyClass pulled(const WeylElement& v, const WeylElement& u) const;

    // Coefficient of sigma~_{w~0 w~} (cone) or sigma~_{w~} (polytope) in phi^*(v sigma_{wv});
    // zero without any polynomial work when the degrees do not match.
    Rational triple_coefficient(const WeylElement& wtilde, const WeylElement& w, const WeylElement& v,
                                PairingVariant variant) const;
    // All triples with nonzero coefficient, v outermost, then by u = wv.
    std::vector<QualifyingTriple> qualifying_triples(PairingVariant variant) const;
    // The triples of a single cubicle label v.
    std::vector<QualifyingTriple> qualifying_triples(PairingVariant variant, const WeylElement& v) const;

    RayData ray_data(const QVec& ray) const;
    Rational scalar_coefficient(const RayData& ray, const WeylElement& wtilde, const WeylElement& w) const;
    // Pairs (w~, w) over minimal coset representatives with nonzero scalar coefficient.
    std::vector<ScalarPair> scalar_pairs(const RayData& ray) const;

private:
    Embedding embedding_;
    std::shared_ptr<SchubertCalculus> source_;
    std::shared_ptr<SchubertCalculus> target_;
    mutable std::mutex pulled_mutex_;
    mutable std::map<std::pair<WeylElement, WeylElement>, CohomologyClass> pulled_;
};

}  // namespace mcone
