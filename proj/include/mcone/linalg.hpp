#pragma once

#include <optional>
#include <vector>

#include "mcone/rational.hpp"

namespace mcone {

struct Echelon {
    QMat reduced;               // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(QMat m);
std::size_t rank(const QMat& m);
std::size_t rank(const std::vector<QVec>& vectors, std::size_t dim);

// Basis of {x : m x = 0}.
std::vector<QVec> nullspace(const QMat& m);

// Some x with m x = b, if one exists.
std::optional<QVec> solve(const QMat& m, const QVec& b);

std::optional<QMat> inverse(const QMat& m);

// Canonical basis of span(vectors): nonzero rows of the rref, each made primitive.
std::vector<QVec> canonical_span(const std::vector<QVec>& vectors, std::size_t dim);

// Orthogonal projection onto the complement of span(basis) (standard dot product).
QVec project_out(const QVec& x, const std::vector<QVec>& basis);

}  // namespace mcone
