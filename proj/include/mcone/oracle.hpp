#pragma once

// Representation-theoretic ground truth by character arithmetic: Freudenthal multiplicities,
// restriction along an embedding, decomposition into source irreducibles and saturation scans.
// Weights are integral vectors in weight coordinates (fundamental weights, then central).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mcone/embedding.hpp"
#include "mcone/rootdata.hpp"

namespace mcone {

inline constexpr std::size_t kDefaultOracleBudget = 1'000'000;  // weight-lattice points

struct Character {
    std::map<IVec, std::int64_t> multiplicities;  // positive entries only

    std::int64_t multiplicity(const IVec& weight) const;
    std::int64_t dimension() const;
    bool operator==(const Character&) const = default;
};

BigInt weyl_dimension(const RootDatum& d, const IVec& highest);

// Multiplicities at the dominant weights of V_highest.
Character dominant_character(const RootDatum& d, const IVec& highest, std::size_t budget = kDefaultOracleBudget);
// The full character; the dimension is checked against the Weyl dimension formula.
Character weight_multiplicities(const RootDatum& d, const IVec& highest, std::size_t budget = kDefaultOracleBudget);

// Pullback of a target character to the source; throws if a weight does not pull back integrally.
Character restrict_character(const Embedding& e, const Character& target_character);

// Source highest weights with their multiplicities, for a W~-invariant source character.
std::map<IVec, std::int64_t> decompose(const RootDatum& d, const Character& character,
                                       std::size_t budget = kDefaultOracleBudget);

class BranchingOracle {
public:
    explicit BranchingOracle(Embedding e, std::size_t budget = kDefaultOracleBudget);

    const Embedding& embedding() const { return embedding_; }
    // Decomposition of V_lambda restricted to the source, memoized per lambda.
    const std::map<IVec, std::int64_t>& branching(const IVec& lambda) const;
    std::int64_t multiplicity(const IVec& source_weight, const IVec& lambda) const;

private:
    Embedding embedding_;
    std::size_t budget_;
    mutable std::map<IVec, std::map<IVec, std::int64_t>> memo_;
};

struct ScanResult {
    std::optional<int> first;                         // smallest n with positive multiplicity
    std::vector<std::pair<int, std::int64_t>> tried;  // (n, multiplicity) for integral multiples
};

// Multiples n = 1..max_n of a rational pair; only integral multiples are evaluated.
ScanResult saturation_scan(const BranchingOracle& oracle, const QVec& source_weight, const QVec& lambda, int max_n);

// Multiplicity of V_nu in V_lambda (x) V_mu.
std::int64_t tensor_multiplicity(const RootDatum& d, const IVec& lambda, const IVec& mu, const IVec& nu,
                                 std::size_t budget = kDefaultOracleBudget);

}  // namespace mcone
