#pragma once

// Shared fixtures for the test binaries: seeded generators, the reference embeddings and
// oracles that reach representation-theoretic answers by routes independent of the library's
// Freudenthal-and-subtract pipeline.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "mcone/embedding.hpp"
#include "mcone/rootdata.hpp"

namespace mcone::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

IVec random_dominant(Rng& rng, const RootDatum& d, int bound);
WeylElement random_element(Rng& rng, const RootDatum& d);
QVec random_vector(Rng& rng, std::size_t n, int bound);

// SU(3) in G2 with pullback (x, y) -> (x + y, y) in fundamental-weight coordinates.
Embedding g2_contains_a2();
// SU(3) acting on its 15-dimensional module of highest weight 2 pi_1 + pi_2.
Embedding plethysm_a2();

// Kostant's partition-function formula; semisimple data only.
std::int64_t kostant_multiplicity(const RootDatum& d, const IVec& highest, const IVec& weight);
// All weights with their multiplicities, grown from the highest weight along simple-root strings.
std::map<IVec, std::int64_t> kostant_character(const RootDatum& d, const IVec& highest);
// Tensor product decomposition by reflecting lambda + (weights of V_mu) + rho into the chamber.
std::map<IVec, std::int64_t> brauer_klimyk(const RootDatum& d, const IVec& lambda, const IVec& mu);
// Multiplicity of V_c in V_a (x) V_b for SU(2).
std::int64_t clebsch_gordan(int a, int b, int c);
// Restriction of a target irreducible, decomposed by the alternating sum over the source Weyl group.
std::map<IVec, std::int64_t> branching_by_alternation(const Embedding& e, const IVec& lambda);

}  // namespace mcone::testing
