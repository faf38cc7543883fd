#include "support.hpp"

#include <stdexcept>

#include "mcone/linalg.hpp"

namespace mcone::testing {

IVec random_dominant(Rng& rng, const RootDatum& d, int bound) {
    IVec w(static_cast<std::size_t>(d.dim()), 0);
    for (int i = 0; i < d.rank(); ++i) w[static_cast<std::size_t>(i)] = rng.uniform(0, bound);
    return w;
}

WeylElement random_element(Rng& rng, const RootDatum& d) {
    Word word(static_cast<std::size_t>(rng.uniform(0, 2 * static_cast<int>(d.positive_roots().size()))));
    for (auto& letter : word) letter = rng.uniform(0, d.rank() - 1);
    return d.from_word(word);
}

QVec random_vector(Rng& rng, std::size_t n, int bound) {
    QVec v(n);
    for (auto& x : v) x = rng.uniform(-bound, bound);
    return v;
}

Embedding g2_contains_a2() {
    QMat m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 1;
    m(1, 1) = 1;
    return embedding_from_matrix(RootDatum::from_type("A2"), RootDatum::from_type("G2"), m);
}

Embedding plethysm_a2() {
    const std::vector<std::pair<QVec, int>> weights = {
        {{2, 1}, 1},  {{3, -1}, 1}, {{0, 2}, 1},   {{1, 0}, 2},  {{-2, 3}, 1}, {{2, -2}, 1},
        {{-1, 1}, 2}, {{0, -1}, 2}, {{-3, 2}, 1}, {{1, -3}, 1}, {{-2, 0}, 1}, {{-1, -2}, 1}};
    std::vector<WeightMultiplicity> list;
    for (const auto& [w, m] : weights) list.push_back({w, m});
    return embedding_from_weights(RootDatum::from_type("A2"), list);
}

namespace {

// Partition function of the positive roots, in simple-root coordinates.
class Kostant {
public:
    explicit Kostant(const RootDatum& d) : datum_(d) {
        if (d.central_rank() != 0) throw std::invalid_argument("Kostant oracle needs a semisimple datum");
        const auto r = static_cast<std::size_t>(d.rank());
        QMat ct(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) ct(j, i) = d.cartan(static_cast<int>(i), static_cast<int>(j));
        to_simple_ = *inverse(ct);
        for (const auto& root : d.positive_roots()) roots_.push_back(root.simple_coeffs);
        rho_ = to_ivec(d.rho());
    }

    std::int64_t multiplicity(const IVec& highest, const IVec& weight) {
        std::int64_t total = 0;
        IVec shifted(highest.size());
        for (std::size_t i = 0; i < highest.size(); ++i) shifted[i] = highest[i] + rho_[i];
        for (const auto& w : datum_.elements()) {
            const QVec image = datum_.act_weight(w, to_qvec(shifted));
            QVec gap(image.size());
            for (std::size_t i = 0; i < image.size(); ++i) gap[i] = image[i] - weight[i] - rho_[i];
            const QVec coeffs = to_simple_.apply(gap);
            if (!is_integral(coeffs)) continue;
            const std::int64_t p = partitions(roots_.size(), to_ivec(coeffs));
            total += (w.length() % 2 == 0) ? p : -p;
        }
        return total;
    }

private:
    std::int64_t partitions(std::size_t k, const IVec& gamma) {
        for (auto c : gamma)
            if (c < 0) return 0;
        if (k == 0) {
            for (auto c : gamma)
                if (c != 0) return 0;
            return 1;
        }
        const auto key = std::make_pair(k, gamma);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::int64_t count = 0;
        IVec rest = gamma;
        const IVec& beta = roots_[k - 1];
        for (;;) {
            count += partitions(k - 1, rest);
            bool nonnegative = true;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                rest[i] -= beta[i];
                nonnegative = nonnegative && rest[i] >= 0;
            }
            if (!nonnegative) break;
        }
        memo_.emplace(key, count);
        return count;
    }

    const RootDatum& datum_;
    QMat to_simple_;
    std::vector<IVec> roots_;
    IVec rho_;
    std::map<std::pair<std::size_t, IVec>, std::int64_t> memo_;
};

}  // namespace

std::int64_t kostant_multiplicity(const RootDatum& d, const IVec& highest, const IVec& weight) {
    return Kostant(d).multiplicity(highest, weight);
}

std::map<IVec, std::int64_t> kostant_character(const RootDatum& d, const IVec& highest) {
    Kostant k(d);
    std::map<IVec, std::int64_t> out;
    std::vector<IVec> frontier{highest};
    out[highest] = 1;
    while (!frontier.empty()) {
        const IVec mu = frontier.back();
        frontier.pop_back();
        for (int i = 0; i < d.rank(); ++i) {
            const IVec next = to_ivec(sub(to_qvec(mu), d.simple_root(i)));
            if (out.count(next)) continue;
            const std::int64_t m = k.multiplicity(highest, next);
            if (m <= 0) continue;
            out[next] = m;
            frontier.push_back(next);
        }
    }
    return out;
}

std::map<IVec, std::int64_t> brauer_klimyk(const RootDatum& d, const IVec& lambda, const IVec& mu) {
    const QVec rho = d.rho();
    std::map<IVec, std::int64_t> out;
    for (const auto& [eps, m] : kostant_character(d, mu)) {
        const QVec shifted = add(add(to_qvec(lambda), to_qvec(eps)), rho);
        const auto [dominant, u] = d.to_dominant_weight(shifted);
        bool regular = true;
        for (int i = 0; i < d.rank(); ++i) regular = regular && dominant[static_cast<std::size_t>(i)] != 0;
        if (!regular) continue;
        out[to_ivec(sub(dominant, rho))] += (u.length() % 2 == 0) ? m : -m;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::int64_t clebsch_gordan(int a, int b, int c) {
    const bool in_range = c >= std::abs(a - b) && c <= a + b;
    return in_range && (a + b - c) % 2 == 0 ? 1 : 0;
}

std::map<IVec, std::int64_t> branching_by_alternation(const Embedding& e, const IVec& lambda) {
    std::map<IVec, std::int64_t> restricted;
    for (const auto& [mu, m] : kostant_character(e.target(), lambda)) restricted[to_ivec(e.pull(to_qvec(mu)))] += m;
    const RootDatum& s = e.source();
    const QVec rho = s.rho();
    std::map<IVec, std::int64_t> out;
    for (const auto& [candidate, unused] : restricted) {
        if (!s.is_dominant_weight(to_qvec(candidate))) continue;
        std::int64_t m = 0;
        for (const auto& w : s.elements()) {
            const IVec probe = to_ivec(sub(add(to_qvec(candidate), rho), s.act_weight(w, rho)));
            const auto it = restricted.find(probe);
            if (it != restricted.end()) m += (w.length() % 2 == 0) ? it->second : -it->second;
        }
        if (m != 0) out[candidate] = m;
    }
    return out;
}

}  // namespace mcone::testing
