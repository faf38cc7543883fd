#pragma once

// Problem configuration files. The accepted document shape is published in docs/config.schema.json;
// every object rejects keys it does not know.

#include <cstddef>
#include <optional>
#include <string>

#include "mcone/embedding.hpp"
#include "mcone/momentcone.hpp"
#include "mcone/serialize.hpp"

namespace mcone {

struct Bounds {
    std::size_t enumeration = kDefaultEnumerationBound;
    std::size_t schubert_group = kDefaultSchubertBound;
    std::size_t triple_budget = MomentOptions{}.triple_budget;
    std::size_t monoid_nodes = 200'000;
    std::size_t oracle = kDefaultOracleBudget;
    int scan_n = 6;
    int grid = 4;
};

struct ProblemConfig {
    std::string name;
    std::optional<Embedding> embedding;  // always set after parsing
    Mode mode = Mode::Cone;
    std::optional<QVec> lambda;        // target weight
    std::optional<QVec> lambda_tilde;  // source weight
    bool prune = false;
    Bounds bounds;
    std::string output_json;
    std::string output_svg;
    Json echo;  // the parsed document, reproduced in outputs

    const Embedding& emb() const { return *embedding; }
};

ProblemConfig parse_config(const Json& document);
ProblemConfig load_config(const std::string& path);

// Weights on the command line: comma-separated rationals such as "1,0" or "1/2,3".
QVec parse_weight_list(const std::string& text);

}  // namespace mcone
