#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mcone {

using Rational = mpq_class;
using BigInt = mpz_class;
using QVec = std::vector<Rational>;
using IVec = std::vector<std::int64_t>;

QVec zeros(std::size_t n);
QVec unit(std::size_t n, std::size_t i);
Rational dot(const QVec& a, const QVec& b);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Rational& s);
QVec negate(const QVec& a);
bool is_zero(const QVec& a);
QVec concat(const QVec& a, const QVec& b);

// Positive rescaling to an integer vector with content 1; the zero vector is returned unchanged.
QVec primitive(const QVec& a);
bool is_integral(const QVec& a);
IVec to_ivec(const QVec& a);  // throws unless integral and within int64
QVec to_qvec(const IVec& a);

// Exact "a/b" (or "a") text.
std::string to_string(const Rational& q);
std::string to_string(const QVec& v);
Rational parse_rational(const std::string& text);

// Dense row-major rational matrix.
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static QMat identity(std::size_t n);
    static QMat from_rows(const std::vector<QVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QVec row(std::size_t i) const;
    QVec col(std::size_t j) const;
    QMat transpose() const;
    QVec apply(const QVec& x) const;  // this * x
    QMat operator*(const QMat& other) const;
    bool operator==(const QMat& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Dense row-major integer matrix; Weyl group elements act through these.
class IMat {
public:
    IMat() = default;
    IMat(std::size_t n) : n_(n), data_(n * n, 0) {}
    static IMat identity(std::size_t n);

    std::size_t size() const { return n_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    IMat operator*(const IMat& other) const;
    IMat transpose() const;
    QVec apply(const QVec& x) const;
    IVec apply(const IVec& x) const;
    QMat to_qmat() const;
    const std::vector<std::int64_t>& data() const { return data_; }
    bool operator==(const IMat& other) const = default;
    auto operator<=>(const IMat& other) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> data_;
};

struct IVecHash {
    std::size_t operator()(const IVec& v) const noexcept;
};

}  // namespace mcone
