#include "mcone/linalg.hpp"

#include "mcone/errors.hpp"

namespace mcone {

Echelon rref(QMat m) {
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m(i, col)) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const QMat& m) { return rref(m).pivots.size(); }

std::size_t rank(const std::vector<QVec>& vectors, std::size_t dim) {
    if (vectors.empty()) return 0;
    return rank(QMat::from_rows(vectors, dim));
}

std::vector<QVec> nullspace(const QMat& m) {
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        QVec v = zeros(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
    if (b.size() != m.rows()) throw ConsistencyError("solve: dimension mismatch");
    QMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    QVec x = zeros(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

std::optional<QMat> inverse(const QMat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    QMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::vector<QVec> canonical_span(const std::vector<QVec>& vectors, std::size_t dim) {
    if (vectors.empty()) return {};
    const Echelon e = rref(QMat::from_rows(vectors, dim));
    std::vector<QVec> basis;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis.push_back(primitive(e.reduced.row(r)));
    return basis;
}

QVec project_out(const QVec& x, const std::vector<QVec>& basis) {
    if (basis.empty()) return x;
    // Solve the normal equations G c = B x, then subtract B^T c.
    const std::size_t k = basis.size();
    QMat gram(k, k);
    QVec rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        rhs[i] = dot(basis[i], x);
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
    }
    const auto c = solve(gram, rhs);
    if (!c) throw ConsistencyError("project_out: degenerate basis");
    QVec r = x;
    for (std::size_t i = 0; i < k; ++i) r = sub(r, scale(basis[i], (*c)[i]));
    return r;
}

}  // namespace mcone
