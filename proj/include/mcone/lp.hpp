#pragma once

// Exact rational linear programming: dense two-phase tableau simplex with Bland's rule.

#include <cstddef>
#include <optional>
#include <vector>

#include "mcone/rational.hpp"

namespace mcone {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;  // objective value when Optimal
    QVec point;      // optimal (or any feasible) point when Optimal
};

// minimize c.x  subject to  A x = b, x >= 0.
LpResult minimize_standard(const QMat& A, const QVec& b, const QVec& c);

enum class Relation { Ge, Le, Eq };

struct LinearConstraint {
    QVec coeffs;
    Relation relation = Relation::Ge;
    Rational rhs;
};

// Optimize over free variables x in R^n subject to the constraints.
LpResult maximize(const QVec& objective, const std::vector<LinearConstraint>& constraints, std::size_t n);
LpResult minimize(const QVec& objective, const std::vector<LinearConstraint>& constraints, std::size_t n);
bool is_feasible(const std::vector<LinearConstraint>& constraints, std::size_t n);
// A point satisfying the constraints, if one exists.
std::optional<QVec> feasible_point(const std::vector<LinearConstraint>& constraints, std::size_t n);

// Exists x with row.x >= 1 for every row (the open cone {row.x > 0} is nonempty).
bool strictly_feasible(const std::vector<QVec>& rows, std::size_t n);
std::optional<QVec> strict_point(const std::vector<QVec>& rows, std::size_t n);

}  // namespace mcone
