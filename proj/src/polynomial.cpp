#include "mcone/polynomial.hpp"

#include <sstream>

#include "mcone/errors.hpp"

namespace mcone {

namespace {

int total_degree(const Polynomial::Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// Successive powers of a single polynomial, computed on demand.
class PowerCache {
public:
    explicit PowerCache(Polynomial base) : powers_{Polynomial::constant(base.nvars(), 1), std::move(base)} {}
    const Polynomial& power(int n) {
        while (static_cast<int>(powers_.size()) <= n) powers_.push_back(powers_.back() * powers_[1]);
        return powers_[static_cast<std::size_t>(n)];
    }

private:
    std::vector<Polynomial> powers_;
};

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::linear(const QVec& coeffs) {
    Polynomial p(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Exponents e(coeffs.size(), 0);
        e[k] = 1;
        p.add_term(e, coeffs[k]);
    }
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Rational Polynomial::constant_term() const {
    const auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) p.terms_.emplace(e, c);
    return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw ConsistencyError("Polynomial::add_term: exponent length mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw ConsistencyError("Polynomial: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r += o.scaled(-1);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(nvars_);
    if (sgn(c) == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw ConsistencyError("Polynomial: variable count mismatch");
    Polynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::substitute(const std::vector<QVec>& images, std::size_t new_nvars) const {
    if (images.size() != nvars_) throw ConsistencyError("Polynomial::substitute: image count mismatch");
    std::vector<PowerCache> caches;
    caches.reserve(nvars_);
    for (const auto& img : images) {
        if (img.size() != new_nvars) throw ConsistencyError("Polynomial::substitute: image dimension mismatch");
        caches.emplace_back(linear(img));
    }
    Polynomial r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Polynomial term = constant(new_nvars, c);
        for (std::size_t k = 0; k < nvars_; ++k)
            if (e[k] > 0) term = term * caches[k].power(e[k]);
        r += term;
    }
    return r;
}

Polynomial Polynomial::substitute_variable(std::size_t k, const QVec& form) const {
    if (form.size() != nvars_) throw ConsistencyError("Polynomial::substitute_variable: dimension mismatch");
    PowerCache cache(linear(form));
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[k] = 0;
        Polynomial mono(nvars_);
        mono.terms_.emplace(std::move(rest), c);
        r += e[k] == 0 ? mono : mono * cache.power(e[k]);
    }
    return r;
}

Polynomial Polynomial::divide_linear(const QVec& form) const {
    if (form.size() != nvars_) throw ConsistencyError("Polynomial::divide_linear: dimension mismatch");
    std::size_t pivot = nvars_;
    for (std::size_t k = 0; k < nvars_; ++k)
        if (sgn(form[k]) != 0) pivot = k;
    if (pivot == nvars_) throw ConsistencyError("Polynomial::divide_linear: zero divisor");

    // Bucket the dividend by degree in the pivot variable and clear buckets from the top down.
    int top = 0;
    for (const auto& [e, c] : terms_) top = std::max(top, e[pivot]);
    std::vector<std::map<Exponents, Rational>> bucket(static_cast<std::size_t>(top) + 1);
    for (const auto& [e, c] : terms_) bucket[static_cast<std::size_t>(e[pivot])][e] = c;

    Polynomial quotient(nvars_);
    const Rational lead = form[pivot];
    for (int d = top; d >= 1; --d) {
        for (const auto& [e, c] : bucket[static_cast<std::size_t>(d)]) {
            if (sgn(c) == 0) continue;
            Exponents m = e;
            --m[pivot];
            const Rational qc = c / lead;
            quotient.add_term(m, qc);
            for (std::size_t j = 0; j < nvars_; ++j) {
                if (j == pivot || sgn(form[j]) == 0) continue;
                Exponents lower = m;
                ++lower[j];
                auto& slot = bucket[static_cast<std::size_t>(d - 1)][lower];
                slot -= qc * form[j];
            }
        }
    }
    for (const auto& [e, c] : bucket[0])
        if (sgn(c) != 0) throw ConsistencyError("Polynomial::divide_linear: nonzero remainder");
    return quotient;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.get_str();
        for (std::size_t k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            out << "*X" << k + 1;
            if (e[k] > 1) out << "^" << e[k];
        }
    }
    return out.str();
}

}  // namespace mcone
