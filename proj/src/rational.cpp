#include "mcone/rational.hpp"

#include <limits>
#include <sstream>

#include "mcone/errors.hpp"

namespace mcone {

QVec zeros(std::size_t n) { return QVec(n, Rational(0)); }

QVec unit(std::size_t n, std::size_t i) {
    QVec v = zeros(n);
    v[i] = 1;
    return v;
}

Rational dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw ConsistencyError("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

QVec add(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw ConsistencyError("add: dimension mismatch");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec sub(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw ConsistencyError("sub: dimension mismatch");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec scale(const QVec& a, const Rational& s) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

QVec negate(const QVec& a) { return scale(a, Rational(-1)); }

bool is_zero(const QVec& a) {
    for (const auto& x : a)
        if (sgn(x) != 0) return false;
    return true;
}

QVec concat(const QVec& a, const QVec& b) {
    QVec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

QVec primitive(const QVec& a) {
    if (is_zero(a)) return a;
    BigInt den_lcm = 1;
    for (const auto& x : a) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    BigInt g = 0;
    std::vector<BigInt> nums(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        nums[i] = a[i].get_num() * (den_lcm / a[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
    }
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rational(nums[i] / g);
    return r;
}

bool is_integral(const QVec& a) {
    for (const auto& x : a)
        if (x.get_den() != 1) return false;
    return true;
}

IVec to_ivec(const QVec& a) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].get_den() != 1) throw ConsistencyError("to_ivec: non-integral entry " + to_string(a[i]));
        if (!a[i].get_num().fits_slong_p()) throw ResourceError("to_ivec: entry exceeds 64-bit range");
        r[i] = a[i].get_num().get_si();
    }
    return r;
}

QVec to_qvec(const IVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rational(static_cast<long>(a[i]));
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const QVec& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i].get_str();
    }
    out << ')';
    return out.str();
}

Rational parse_rational(const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    const auto last = text.find_last_not_of(" \t");
    const std::string trimmed = first == std::string::npos ? "" : text.substr(first, last - first + 1);
    Rational q;
    if (trimmed.empty() || q.set_str(trimmed, 10) != 0) throw ConfigError("not a rational number: '" + text + "'");
    if (q.get_den() == 0) throw ConfigError("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
    QMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ConsistencyError("QMat::from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QVec QMat::row(std::size_t i) const {
    return QVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVec QMat::col(std::size_t j) const {
    QVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QVec QMat::apply(const QVec& x) const {
    if (x.size() != cols_) throw ConsistencyError("QMat::apply: dimension mismatch");
    QVec y = zeros(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn((*this)(i, j)) != 0 && sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
    return y;
}

QMat QMat::operator*(const QMat& other) const {
    if (cols_ != other.rows_) throw ConsistencyError("QMat::operator*: dimension mismatch");
    QMat p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (sgn((*this)(i, k)) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += (*this)(i, k) * other(k, j);
        }
    return p;
}

IMat IMat::identity(std::size_t n) {
    IMat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IMat IMat::operator*(const IMat& other) const {
    if (n_ != other.n_) throw ConsistencyError("IMat::operator*: dimension mismatch");
    IMat p(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const std::int64_t a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) p(i, j) += a * other(k, j);
        }
    return p;
}

IMat IMat::transpose() const {
    IMat t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QVec IMat::apply(const QVec& x) const {
    if (x.size() != n_) throw ConsistencyError("IMat::apply: dimension mismatch");
    QVec y = zeros(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const std::int64_t a = (*this)(i, j);
            if (a != 0 && sgn(x[j]) != 0) y[i] += Rational(static_cast<long>(a)) * x[j];
        }
    return y;
}

IVec IMat::apply(const IVec& x) const {
    if (x.size() != n_) throw ConsistencyError("IMat::apply: dimension mismatch");
    IVec y(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
}

QMat IMat::to_qmat() const {
    QMat m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = Rational(static_cast<long>((*this)(i, j)));
    return m;
}

std::size_t IVecHash::operator()(const IVec& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace mcone
