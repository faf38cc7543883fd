#pragma once

// Sparse multivariate polynomials with rational coefficients.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mcone/rational.hpp"

namespace mcone {

class Polynomial {
public:
    using Exponents = std::vector<int>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial linear(const QVec& coeffs);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    Rational constant_term() const;
    Polynomial homogeneous_part(int d) const;

    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o);
    bool operator==(const Polynomial& o) const = default;

    // Replace each variable X_k by the linear form images[k] in new_nvars variables.
    Polynomial substitute(const std::vector<QVec>& images, std::size_t new_nvars) const;
    // Replace only X_k by a linear form in the same variables.
    Polynomial substitute_variable(std::size_t k, const QVec& form) const;
    // Exact quotient by a nonzero linear form; throws ConsistencyError on a remainder.
    Polynomial divide_linear(const QVec& form) const;

    std::string to_string() const;

private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;  // no zero coefficients
};

}  // namespace mcone
