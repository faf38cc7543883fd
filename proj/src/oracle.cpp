#include "mcone/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mcone/errors.hpp"

namespace mcone {

namespace {

// Integer multiple of the invariant form on the semisimple block, plus integral root data.
class WeightGeometry {
public:
    explicit WeightGeometry(const RootDatum& d) : rank_(static_cast<std::size_t>(d.rank())), dim_(d.dim()) {
        const QMat& q = d.weight_gram();
        BigInt scale = 1;
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q(i, j).get_den_mpz_t());
        gram_.assign(rank_ * rank_, 0);
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) {
                const Rational v = q(i, j) * scale;
                gram_[i * rank_ + j] = v.get_num().get_si();
            }
        for (std::size_t i = 0; i < rank_; ++i) simple_.push_back(to_ivec(d.simple_root(static_cast<int>(i))));
        for (const auto& r : d.positive_roots()) positive_.push_back(to_ivec(r.weight));
        rho_vee_ = zeros(static_cast<std::size_t>(dim_));
        for (const auto& r : d.positive_roots()) rho_vee_ = add(rho_vee_, r.coroot);
        rho_vee_ = scale_vec(rho_vee_, Rational(1, 2));
    }

    std::int64_t form(const IVec& a, const IVec& b) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) s += a[i] * gram_[i * rank_ + j] * b[j];
        return s;
    }

    bool dominant(const IVec& w) const {
        for (std::size_t i = 0; i < rank_; ++i)
            if (w[i] < 0) return false;
        return true;
    }

    IVec to_dominant(IVec w) const {
        for (;;) {
            std::size_t i = 0;
            while (i < rank_ && w[i] >= 0) ++i;
            if (i == rank_) return w;
            const std::int64_t c = w[i];
            for (std::size_t k = 0; k < w.size(); ++k) w[k] -= c * simple_[i][k];
        }
    }

    IVec reflect(const IVec& w, std::size_t i) const {
        IVec out = w;
        for (std::size_t k = 0; k < w.size(); ++k) out[k] -= w[i] * simple_[i][k];
        return out;
    }

    IVec plus_rho(IVec w) const {
        for (std::size_t i = 0; i < rank_; ++i) ++w[i];
        return w;
    }

    Rational height(const IVec& w) const { return dot(to_qvec(w), rho_vee_); }

    std::size_t rank() const { return rank_; }
    const std::vector<IVec>& positive() const { return positive_; }

private:
    static QVec scale_vec(const QVec& v, const Rational& c) {
        QVec out = v;
        for (auto& x : out) x *= c;
        return out;
    }

    std::size_t rank_;
    int dim_;
    std::vector<std::int64_t> gram_;
    std::vector<IVec> simple_;
    std::vector<IVec> positive_;
    QVec rho_vee_;
};

IVec plus(const IVec& a, const IVec& b, std::int64_t k = 1) {
    IVec out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += k * b[i];
    return out;
}

// Highest first: larger height, then lexicographically larger.
bool higher(const WeightGeometry& g, const IVec& a, const IVec& b) {
    const Rational ha = g.height(a);
    const Rational hb = g.height(b);
    if (ha != hb) return ha > hb;
    return a > b;
}

void check_highest(const RootDatum& d, const IVec& highest) {
    if (highest.size() != static_cast<std::size_t>(d.dim()))
        throw ConfigError("highest weight has " + std::to_string(highest.size()) + " coordinates, expected " +
                          std::to_string(d.dim()));
    for (int i = 0; i < d.rank(); ++i)
        if (highest[static_cast<std::size_t>(i)] < 0) throw ConfigError("highest weight is not dominant");
}

}  // namespace

std::int64_t Character::multiplicity(const IVec& weight) const {
    const auto it = multiplicities.find(weight);
    return it == multiplicities.end() ? 0 : it->second;
}

std::int64_t Character::dimension() const {
    std::int64_t total = 0;
    for (const auto& [w, m] : multiplicities) total += m;
    return total;
}

BigInt weyl_dimension(const RootDatum& d, const IVec& highest) {
    check_highest(d, highest);
    const QVec shifted = add(to_qvec(highest), d.rho());
    Rational product = 1;
    for (const auto& r : d.positive_roots()) product *= dot(shifted, r.coroot) / dot(d.rho(), r.coroot);
    if (product.get_den() != 1) throw ConsistencyError("Weyl dimension formula produced a fraction");
    return product.get_num();
}

Character dominant_character(const RootDatum& d, const IVec& highest, std::size_t budget) {
    check_highest(d, highest);
    const WeightGeometry g(d);

    // Dominant weights below the highest weight: closure under subtracting positive roots.
    std::set<IVec> found{highest};
    std::vector<IVec> queue{highest};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const IVec& alpha : g.positive()) {
            IVec next = plus(queue[head], alpha, -1);
            if (!g.dominant(next) || found.count(next)) continue;
            if (found.size() >= budget)
                throw ResourceError("weight enumeration for " + d.label() + " exceeds the oracle budget of " +
                                    std::to_string(budget) + " points");
            found.insert(next);
            queue.push_back(std::move(next));
        }
    }
    std::vector<IVec> order(found.begin(), found.end());
    std::sort(order.begin(), order.end(), [&](const IVec& a, const IVec& b) { return higher(g, a, b); });

    Character chi;
    const IVec top = g.plus_rho(highest);
    const std::int64_t top_norm = g.form(top, top);
    for (const IVec& mu : order) {
        if (mu == highest) {
            chi.multiplicities[mu] = 1;
            continue;
        }
        std::int64_t sum = 0;
        for (const IVec& alpha : g.positive()) {
            for (std::int64_t k = 1;; ++k) {
                const IVec up = plus(mu, alpha, k);
                const std::int64_t m = chi.multiplicity(g.to_dominant(up));
                if (m == 0) break;
                sum += m * g.form(up, alpha);
            }
        }
        const IVec shifted = g.plus_rho(mu);
        const std::int64_t gap = top_norm - g.form(shifted, shifted);
        if (gap <= 0 || (2 * sum) % gap != 0) throw ConsistencyError("Freudenthal recursion failed at a weight");
        const std::int64_t m = 2 * sum / gap;
        if (m > 0) chi.multiplicities[mu] = m;
    }
    return chi;
}

Character weight_multiplicities(const RootDatum& d, const IVec& highest, std::size_t budget) {
    const Character dominant = dominant_character(d, highest, budget);
    const WeightGeometry g(d);
    Character chi;
    for (const auto& [mu, m] : dominant.multiplicities) {
        std::vector<IVec> orbit{mu};
        std::set<IVec> seen{mu};
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (std::size_t i = 0; i < g.rank(); ++i) {
                IVec next = g.reflect(orbit[head], i);
                if (seen.insert(next).second) orbit.push_back(std::move(next));
            }
        if (chi.multiplicities.size() + orbit.size() > budget)
            throw ResourceError("character of " + d.label() + " exceeds the oracle budget of " + std::to_string(budget) +
                                " weights");
        for (auto& w : orbit) chi.multiplicities.emplace(std::move(w), m);
    }
    if (BigInt(static_cast<long>(chi.dimension())) != weyl_dimension(d, highest))
        throw ConsistencyError("character dimension disagrees with the Weyl dimension formula");
    return chi;
}

Character restrict_character(const Embedding& e, const Character& target_character) {
    Character out;
    for (const auto& [mu, m] : target_character.multiplicities) {
        const QVec pulled = e.pull(to_qvec(mu));
        if (!is_integral(pulled)) throw ConsistencyError("weight " + to_string(to_qvec(mu)) + " pulls back non-integrally");
        out.multiplicities[to_ivec(pulled)] += m;
    }
    return out;
}

std::map<IVec, std::int64_t> decompose(const RootDatum& d, const Character& character, std::size_t budget) {
    const WeightGeometry g(d);
    std::map<IVec, std::int64_t> remaining;
    for (const auto& [w, m] : character.multiplicities)
        if (g.dominant(w)) remaining.emplace(w, m);

    std::map<IVec, std::int64_t> out;
    while (!remaining.empty()) {
        auto top = remaining.begin();
        for (auto it = remaining.begin(); it != remaining.end(); ++it)
            if (higher(g, it->first, top->first)) top = it;
        const IVec highest = top->first;
        const std::int64_t copies = top->second;
        out[highest] = copies;
        for (const auto& [w, m] : dominant_character(d, highest, budget).multiplicities) {
            auto it = remaining.find(w);
            if (it == remaining.end() || it->second < copies * m)
                throw ConsistencyError("character is not a nonnegative combination of irreducibles");
            it->second -= copies * m;
            if (it->second == 0) remaining.erase(it);
        }
    }
    return out;
}

BranchingOracle::BranchingOracle(Embedding e, std::size_t budget) : embedding_(std::move(e)), budget_(budget) {}

const std::map<IVec, std::int64_t>& BranchingOracle::branching(const IVec& lambda) const {
    const auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second;
    const Character restricted =
        restrict_character(embedding_, weight_multiplicities(embedding_.target(), lambda, budget_));
    return memo_.emplace(lambda, decompose(embedding_.source(), restricted, budget_)).first->second;
}

std::int64_t BranchingOracle::multiplicity(const IVec& source_weight, const IVec& lambda) const {
    const auto& parts = branching(lambda);
    const auto it = parts.find(source_weight);
    return it == parts.end() ? 0 : it->second;
}

ScanResult saturation_scan(const BranchingOracle& oracle, const QVec& source_weight, const QVec& lambda, int max_n) {
    ScanResult result;
    for (int n = 1; n <= max_n; ++n) {
        const QVec a = scale(source_weight, Rational(n));
        const QVec b = scale(lambda, Rational(n));
        if (!is_integral(a) || !is_integral(b)) continue;
        const std::int64_t m = oracle.multiplicity(to_ivec(a), to_ivec(b));
        result.tried.emplace_back(n, m);
        if (m > 0) {
            result.first = n;
            break;
        }
    }
    return result;
}

std::int64_t tensor_multiplicity(const RootDatum& d, const IVec& lambda, const IVec& mu, const IVec& nu,
                                 std::size_t budget) {
    const auto r = static_cast<std::ptrdiff_t>(d.rank());
    IVec joined(lambda.begin(), lambda.begin() + r);
    joined.insert(joined.end(), mu.begin(), mu.begin() + r);
    joined.insert(joined.end(), lambda.begin() + r, lambda.end());
    joined.insert(joined.end(), mu.begin() + r, mu.end());
    return BranchingOracle(diagonal_embedding(d, 2), budget).multiplicity(nu, joined);
}

}  // namespace mcone
