#include "mcone/lp.hpp"

#include <optional>

#include "mcone/errors.hpp"

namespace mcone {

namespace {

// Tableau over columns [0, ncols) plus a right-hand side column; one basic variable per row.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_(rows, cols + 1), basis_(rows) {}

    Rational& at(std::size_t i, std::size_t j) { return t_(i, j); }
    const Rational& at(std::size_t i, std::size_t j) const { return t_(i, j); }
    Rational& rhs(std::size_t i) { return t_(i, cols_); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = 1 / t_(r, c);
        for (std::size_t j = 0; j <= cols_; ++j)
            if (sgn(t_(r, j)) != 0) t_(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || sgn(t_(i, c)) == 0) continue;
            const Rational f = t_(i, c);
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(t_(r, j)) != 0) t_(i, j) -= f * t_(r, j);
        }
        basis_[r] = c;
    }

    void drop_row(std::size_t r) {
        QMat next(rows_ - 1, cols_ + 1);
        for (std::size_t i = 0, k = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j <= cols_; ++j) next(k, j) = t_(i, j);
            ++k;
        }
        t_ = std::move(next);
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        --rows_;
    }

    // Minimizes cost over columns in [0, active); returns false if unbounded.
    bool optimize(const QVec& cost, std::size_t active) {
        for (;;) {
            // Reduced costs d_j = c_j - c_B . column_j; Bland: first negative.
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < active && !entering; ++j) {
                if (is_basic(j)) continue;
                Rational d = cost[j];
                for (std::size_t i = 0; i < rows_; ++i)
                    if (sgn(t_(i, j)) != 0 && sgn(cost[basis_[i]]) != 0) d -= cost[basis_[i]] * t_(i, j);
                if (sgn(d) < 0) entering = j;
            }
            if (!entering) return true;
            const std::size_t c = *entering;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (sgn(t_(i, c)) <= 0) continue;
                const Rational ratio = t_(i, cols_) / t_(i, c);
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, c);
        }
    }

private:
    bool is_basic(std::size_t j) const {
        for (auto b : basis_)
            if (b == j) return true;
        return false;
    }

    std::size_t rows_, cols_;
    QMat t_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpResult minimize_standard(const QMat& A, const QVec& b, const QVec& c) {
    const std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m || c.size() != n) throw ConsistencyError("minimize_standard: dimension mismatch");
    Tableau tab(m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = sgn(b[i]) < 0;
        for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = flip ? Rational(-A(i, j)) : A(i, j);
        tab.at(i, n + i) = 1;
        tab.rhs(i) = flip ? Rational(-b[i]) : b[i];
        tab.basis()[i] = n + i;
    }
    QVec phase1 = zeros(n + m);
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
    tab.optimize(phase1, n + m);
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < tab.rows(); ++i)
        if (tab.basis()[i] >= n) infeasibility += tab.rhs(i);
    if (sgn(infeasibility) != 0) return {LpStatus::Infeasible, 0, {}};

    // Drive artificials out of the basis; rows where that is impossible are redundant.
    for (std::size_t i = 0; i < tab.rows();) {
        if (tab.basis()[i] < n) {
            ++i;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < n && !col; ++j)
            if (sgn(tab.at(i, j)) != 0) col = j;
        if (col) {
            tab.pivot(i, *col);
            ++i;
        } else {
            tab.drop_row(i);
        }
    }
    QVec cost = c;
    cost.resize(n + m, Rational(0));
    if (!tab.optimize(cost, n)) return {LpStatus::Unbounded, 0, {}};
    LpResult res;
    res.status = LpStatus::Optimal;
    res.point = zeros(n);
    for (std::size_t i = 0; i < tab.rows(); ++i) res.point[tab.basis()[i]] = tab.rhs(i);
    res.value = dot(c, res.point);
    return res;
}

namespace {

// Free variables split as x = p - q; Ge/Le rows receive a surplus/slack column.
LpResult solve_general(const QVec& objective, const std::vector<LinearConstraint>& constraints, std::size_t n,
                       bool maximize_objective) {
    if (objective.size() != n) throw ConsistencyError("LP objective dimension mismatch");
    std::size_t slacks = 0;
    for (const auto& con : constraints) {
        if (con.coeffs.size() != n) throw ConsistencyError("LP constraint dimension mismatch");
        if (con.relation != Relation::Eq) ++slacks;
    }
    const std::size_t cols = 2 * n + slacks;
    QMat A(constraints.size(), cols);
    QVec b(constraints.size());
    std::size_t s = 0;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const auto& con = constraints[i];
        for (std::size_t j = 0; j < n; ++j) {
            A(i, j) = con.coeffs[j];
            A(i, n + j) = -con.coeffs[j];
        }
        if (con.relation == Relation::Ge) A(i, 2 * n + s++) = -1;
        else if (con.relation == Relation::Le) A(i, 2 * n + s++) = 1;
        b[i] = con.rhs;
    }
    QVec c = zeros(cols);
    for (std::size_t j = 0; j < n; ++j) {
        c[j] = maximize_objective ? Rational(-objective[j]) : objective[j];
        c[n + j] = -c[j];
    }
    LpResult std_res = minimize_standard(A, b, c);
    if (std_res.status != LpStatus::Optimal) return std_res;
    LpResult res;
    res.status = LpStatus::Optimal;
    res.point = zeros(n);
    for (std::size_t j = 0; j < n; ++j) res.point[j] = std_res.point[j] - std_res.point[n + j];
    res.value = dot(objective, res.point);
    return res;
}

}  // namespace

LpResult maximize(const QVec& objective, const std::vector<LinearConstraint>& constraints, std::size_t n) {
    return solve_general(objective, constraints, n, true);
}

LpResult minimize(const QVec& objective, const std::vector<LinearConstraint>& constraints, std::size_t n) {
    return solve_general(objective, constraints, n, false);
}

std::optional<QVec> feasible_point(const std::vector<LinearConstraint>& constraints, std::size_t n) {
    const LpResult r = solve_general(zeros(n), constraints, n, false);
    if (r.status != LpStatus::Optimal) return std::nullopt;
    return r.point;
}

bool is_feasible(const std::vector<LinearConstraint>& constraints, std::size_t n) {
    return feasible_point(constraints, n).has_value();
}

std::optional<QVec> strict_point(const std::vector<QVec>& rows, std::size_t n) {
    std::vector<LinearConstraint> cons;
    cons.reserve(rows.size());
    for (const auto& r : rows) cons.push_back({r, Relation::Ge, Rational(1)});
    return feasible_point(cons, n);
}

bool strictly_feasible(const std::vector<QVec>& rows, std::size_t n) { return strict_point(rows, n).has_value(); }

}  // namespace mcone
