#pragma once

// JSON encodings. Rationals are [num, den] with den > 0 and the fraction reduced; integers that do
// not fit in 64 bits are emitted as decimal strings. Object keys are sorted, so dumps are canonical.

#include <json.hpp>

#include "mcone/embedding.hpp"
#include "mcone/oracle.hpp"
#include "mcone/polyhedra.hpp"
#include "mcone/rational.hpp"

namespace mcone {

using Json = nlohmann::json;

Json integer_json(const BigInt& n);
Json rational_json(const Rational& q);
// Accepts an integer, a [num, den] pair or a "p/q" string; throws ConfigError otherwise.
Rational rational_from_json(const Json& j);
Json qvec_json(const QVec& v);
QVec qvec_from_json(const Json& j);
Json matrix_json(const QMat& m);

Json word_json(const Word& w);  // "s1s2", "1" for the identity
Json provenance_json(const Provenance& p);
Json inequality_json(const Inequality& row);
Json system_json(const InequalitySystem& s);  // {variables, rows}
Json character_json(const Character& c);

// Projected roots, the killed simple roots, cubicles, the relative Weyl set and the lift.
Json cubicles_json(const Embedding& e);

}  // namespace mcone
