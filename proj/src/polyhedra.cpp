#include "mcone/polyhedra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "mcone/errors.hpp"
#include "mcone/linalg.hpp"

namespace mcone {

namespace {

struct DdRay {
    QVec v;
    std::vector<bool> zero;  // zero[k]: constraint k is tight
};

bool contains_all(const std::vector<bool>& big, const std::vector<bool>& small) {
    for (std::size_t k = 0; k < small.size(); ++k)
        if (small[k] && !big[k]) return false;
    return true;
}

Cone canonical_cone(std::vector<QVec> rays, const std::vector<QVec>& lineality, std::size_t dim) {
    Cone c;
    c.dim = dim;
    c.lineality = canonical_span(lineality, dim);
    std::set<QVec> uniq;
    for (auto& r : rays) {
        QVec p = primitive(project_out(r, c.lineality));
        if (!is_zero(p)) uniq.insert(std::move(p));
    }
    c.rays.assign(uniq.begin(), uniq.end());
    return c;
}

// Incremental double description from the whole space; lineality is eliminated first.
Cone double_description(const std::vector<QVec>& constraints, std::size_t dim) {
    std::vector<QVec> lin;
    for (std::size_t i = 0; i < dim; ++i) lin.push_back(unit(dim, i));
    std::vector<DdRay> rays;
    const std::size_t m = constraints.size();

    for (std::size_t k = 0; k < m; ++k) {
        const QVec& a = constraints[k];
        std::optional<std::size_t> pivot;
        for (std::size_t i = 0; i < lin.size() && !pivot; ++i)
            if (sgn(dot(a, lin[i])) != 0) pivot = i;

        if (pivot) {
            QVec l0 = lin[*pivot];
            Rational al0 = dot(a, l0);
            if (sgn(al0) < 0) {
                l0 = negate(l0);
                al0 = -al0;
            }
            std::vector<QVec> next_lin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == *pivot) continue;
                const Rational ai = dot(a, lin[i]);
                next_lin.push_back(sgn(ai) == 0 ? lin[i] : sub(lin[i], scale(l0, ai / al0)));
            }
            lin = std::move(next_lin);
            for (auto& r : rays) {
                const Rational ar = dot(a, r.v);
                if (sgn(ar) != 0) r.v = primitive(sub(r.v, scale(l0, ar / al0)));
                r.zero[k] = true;
            }
            DdRay fresh{primitive(l0), std::vector<bool>(m, false)};
            for (std::size_t i = 0; i < k; ++i) fresh.zero[i] = true;
            rays.push_back(std::move(fresh));
            continue;
        }

        std::vector<Rational> value(rays.size());
        std::vector<std::size_t> plus, minus;
        std::vector<DdRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = dot(a, rays[i].v);
            const int s = sgn(value[i]);
            if (s > 0) plus.push_back(i);
            else if (s < 0) minus.push_back(i);
            if (s >= 0) {
                DdRay r = rays[i];
                if (s == 0) r.zero[k] = true;
                next.push_back(std::move(r));
            }
        }
        const std::size_t pointed_dim = dim - lin.size();
        for (auto p : plus)
            for (auto n : minus) {
                std::vector<bool> common(m, false);
                std::size_t count = 0;
                for (std::size_t j = 0; j < k; ++j)
                    if (rays[p].zero[j] && rays[n].zero[j]) {
                        common[j] = true;
                        ++count;
                    }
                if (count + 2 < pointed_dim) continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
                    if (o != p && o != n && contains_all(rays[o].zero, common)) adjacent = false;
                if (!adjacent) continue;
                DdRay r;
                r.v = primitive(add(scale(rays[n].v, value[p]), scale(rays[p].v, -value[n])));
                r.zero = std::move(common);
                r.zero[k] = true;
                next.push_back(std::move(r));
            }
        rays = std::move(next);
    }
    std::vector<QVec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    return canonical_cone(std::move(out), lin, dim);
}

void check_dim(std::size_t dim, std::size_t max_dim) {
    if (dim > max_dim)
        throw ResourceError("cone dimension " + std::to_string(dim) + " exceeds the configured bound " +
                            std::to_string(max_dim));
}

// Feasibility of sum c_i g_i + sum d_j l_j = x with c >= 0.
bool in_span_cone(const std::vector<QVec>& gens, const std::vector<QVec>& lin, const QVec& x) {
    const std::size_t dim = x.size();
    const std::size_t cols = gens.size() + 2 * lin.size();
    if (cols == 0) return is_zero(x);
    QMat A(dim, cols);
    for (std::size_t i = 0; i < dim; ++i) {
        std::size_t col = 0;
        for (const auto& g : gens) A(i, col++) = g[i];
        for (const auto& l : lin) {
            A(i, col++) = l[i];
            A(i, col++) = -l[i];
        }
    }
    return minimize_standard(A, x, zeros(cols)).status == LpStatus::Optimal;
}

bool provenance_less(const Provenance& a, const Provenance& b) {
    return std::tie(a.tag, a.wtilde, a.w, a.v, a.ray) < std::tie(b.tag, b.wtilde, b.w, b.v, b.ray);
}

}  // namespace

Cone cone_from_inequalities(const std::vector<QVec>& ge, const std::vector<QVec>& eq, std::size_t dim,
                            std::size_t max_dim) {
    check_dim(dim, max_dim);
    std::vector<QVec> rows;
    for (const auto& r : ge) {
        if (r.size() != dim) throw ConsistencyError("cone_from_inequalities: dimension mismatch");
        if (!is_zero(r)) rows.push_back(r);
    }
    for (const auto& r : eq) {
        if (r.size() != dim) throw ConsistencyError("cone_from_inequalities: dimension mismatch");
        if (is_zero(r)) continue;
        rows.push_back(r);
        rows.push_back(negate(r));
    }
    return double_description(rows, dim);
}

Cone dualize(const Cone& c, std::size_t max_dim) { return cone_from_inequalities(c.rays, c.lineality, c.dim, max_dim); }

Cone cone_from_generators(const std::vector<QVec>& generators, const std::vector<QVec>& lineality, std::size_t dim,
                          std::size_t max_dim) {
    const Cone dual = cone_from_inequalities(generators, lineality, dim, max_dim);
    return dualize(dual, max_dim);
}

std::vector<QVec> facet_rows(const Cone& c, std::size_t max_dim) {
    const Cone dual = dualize(c, max_dim);
    std::vector<QVec> rows = dual.rays;
    for (const auto& l : dual.lineality) {
        rows.push_back(l);
        rows.push_back(negate(l));
    }
    return rows;
}

bool contains_by_generators(const Cone& c, const QVec& x) { return in_span_cone(c.rays, c.lineality, x); }

bool contains_by_facets(const Cone& c, const QVec& x, std::size_t max_dim) {
    for (const auto& r : facet_rows(c, max_dim))
        if (sgn(dot(r, x)) < 0) return false;
    return true;
}

bool Inequality::is_chamber() const {
    if (provenance.empty()) return false;
    return std::all_of(provenance.begin(), provenance.end(), [](const Provenance& p) { return p.tag == "chamber"; });
}

bool Inequality::holds(const QVec& x) const { return sgn(slack(x)) >= 0; }

void InequalitySystem::add(const QVec& coeffs, const Rational& rhs, Provenance provenance) {
    if (coeffs.size() != dim()) throw ConsistencyError("InequalitySystem::add: dimension mismatch");
    Inequality row;
    if (is_zero(coeffs)) {
        if (sgn(rhs) <= 0) return;
        row.coeffs = coeffs;
        row.rhs = 1;
    } else {
        row.coeffs = primitive(coeffs);
        std::size_t k = 0;
        while (sgn(coeffs[k]) == 0) ++k;
        row.rhs = rhs * row.coeffs[k] / coeffs[k];
    }
    for (auto& existing : rows_) {
        if (existing.coeffs == row.coeffs && existing.rhs == row.rhs) {
            if (std::find(existing.provenance.begin(), existing.provenance.end(), provenance) ==
                existing.provenance.end())
                existing.provenance.push_back(std::move(provenance));
            return;
        }
    }
    row.provenance.push_back(std::move(provenance));
    rows_.push_back(std::move(row));
}

void InequalitySystem::add(const Inequality& row) {
    if (row.provenance.empty()) {
        add(row.coeffs, row.rhs, Provenance{});
        return;
    }
    for (const auto& p : row.provenance) add(row.coeffs, row.rhs, p);
}

void InequalitySystem::add_equality(const QVec& coeffs, const Rational& rhs, const Provenance& provenance) {
    add(coeffs, rhs, provenance);
    add(negate(coeffs), -rhs, provenance);
}

void InequalitySystem::canonicalize() {
    for (auto& r : rows_) std::sort(r.provenance.begin(), r.provenance.end(), provenance_less);
    std::sort(rows_.begin(), rows_.end(), [](const Inequality& a, const Inequality& b) {
        return std::tie(a.coeffs, a.rhs) < std::tie(b.coeffs, b.rhs);
    });
}

bool InequalitySystem::satisfies(const QVec& x) const {
    return std::all_of(rows_.begin(), rows_.end(), [&](const Inequality& r) { return r.holds(x); });
}

std::vector<std::size_t> InequalitySystem::tight_rows(const QVec& x) const {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (sgn(rows_[i].slack(x)) == 0) tight.push_back(i);
    return tight;
}

std::vector<LinearConstraint> InequalitySystem::constraints() const {
    std::vector<LinearConstraint> cons;
    cons.reserve(rows_.size());
    for (const auto& r : rows_) cons.push_back({r.coeffs, Relation::Ge, r.rhs});
    return cons;
}

bool InequalitySystem::is_feasible() const { return mcone::is_feasible(constraints(), dim()); }

std::optional<QVec> implication_certificate(const std::vector<Inequality>& system, const Inequality& row) {
    const std::size_t dim = row.coeffs.size();
    const std::size_t m = system.size();
    if (m == 0) {
        if (is_zero(row.coeffs) && sgn(row.rhs) <= 0) return QVec{};
        return std::nullopt;
    }
    QMat A(dim, m);
    QVec cost(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < dim; ++i) A(i, j) = system[j].coeffs[i];
        cost[j] = -system[j].rhs;
    }
    const LpResult r = minimize_standard(A, row.coeffs, cost);
    if (r.status == LpStatus::Infeasible) return std::nullopt;
    if (r.status == LpStatus::Unbounded) throw ConsistencyError("implication test on an infeasible system");
    if (-r.value < row.rhs) return std::nullopt;
    return r.point;
}

bool verify_certificate(const std::vector<Inequality>& system, const Inequality& row, const QVec& multipliers) {
    if (multipliers.size() != system.size()) return false;
    QVec combo = zeros(row.coeffs.size());
    Rational bound = 0;
    for (std::size_t j = 0; j < system.size(); ++j) {
        if (sgn(multipliers[j]) < 0) return false;
        if (sgn(multipliers[j]) == 0) continue;
        combo = add(combo, scale(system[j].coeffs, multipliers[j]));
        bound += multipliers[j] * system[j].rhs;
    }
    return combo == row.coeffs && bound >= row.rhs;
}

bool implies(const InequalitySystem& system, const Inequality& row) {
    if (!system.is_feasible()) return true;
    return implication_certificate(system.rows(), row).has_value();
}

PruneResult prune_redundant(const InequalitySystem& s) {
    InequalitySystem canon = s;
    canon.canonicalize();
    PruneResult result;
    if (!canon.is_feasible()) {
        result.system = canon;
        return result;
    }
    const auto& rows = canon.rows();
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].is_chamber()) order.push_back(i);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].is_chamber()) order.push_back(i);

    std::vector<bool> keep(rows.size(), true);
    for (auto idx : order) {
        std::vector<Inequality> others;
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (keep[j] && j != idx) others.push_back(rows[j]);
        if (implication_certificate(others, rows[idx])) keep[idx] = false;
    }
    result.system = InequalitySystem(canon.variables());
    for (std::size_t j = 0; j < rows.size(); ++j)
        if (keep[j]) result.system.add(rows[j]);
    result.system.canonicalize();
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (keep[j]) continue;
        auto cert = implication_certificate(result.system.rows(), rows[j]);
        if (!cert) throw ConsistencyError("pruning removed a row that the retained system does not imply");
        result.removed.push_back({rows[j], std::move(*cert)});
    }
    return result;
}

bool systems_equivalent(const InequalitySystem& a, const InequalitySystem& b) {
    if (a.dim() != b.dim()) return false;
    const bool fa = a.is_feasible(), fb = b.is_feasible();
    if (!fa || !fb) return fa == fb;
    for (const auto& r : a.rows())
        if (!implication_certificate(b.rows(), r)) return false;
    for (const auto& r : b.rows())
        if (!implication_certificate(a.rows(), r)) return false;
    return true;
}

VertexResult vertex_enumeration(const std::vector<LinearConstraint>& constraints, std::size_t n, std::size_t max_dim) {
    // Homogenize: a.x >= b becomes a.x - b t >= 0 with t >= 0.
    std::vector<QVec> ge, eq;
    for (const auto& c : constraints) {
        QVec row = c.coeffs;
        row.push_back(-c.rhs);
        if (c.relation == Relation::Eq) eq.push_back(std::move(row));
        else if (c.relation == Relation::Ge) ge.push_back(std::move(row));
        else ge.push_back(negate(row));
    }
    ge.push_back(unit(n + 1, n));
    const Cone cone = cone_from_inequalities(ge, eq, n + 1, max_dim + 1);
    VertexResult res;
    std::set<QVec> verts;
    for (const auto& r : cone.rays) {
        if (sgn(r[n]) > 0) {
            QVec v(r.begin(), r.end() - 1);
            verts.insert(scale(v, 1 / r[n]));
        } else {
            res.recession_rays.emplace_back(r.begin(), r.end() - 1);
        }
    }
    for (const auto& l : cone.lineality) {
        res.recession_rays.emplace_back(l.begin(), l.end() - 1);
        res.recession_rays.push_back(negate(res.recession_rays.back()));
    }
    res.vertices.assign(verts.begin(), verts.end());
    res.empty = res.vertices.empty();
    res.bounded = res.recession_rays.empty();
    return res;
}

namespace {

class MonoidSearch {
public:
    MonoidSearch(const std::vector<IVec>& gens, std::size_t bound) : bound_(bound) {
        for (const auto& g : gens) gens_.push_back(to_qvec(g));
    }

    bool rational_member(const QVec& x, std::size_t start) const {
        std::vector<QVec> tail(gens_.begin() + static_cast<std::ptrdiff_t>(start), gens_.end());
        return in_span_cone(tail, {}, x);
    }

    // Returns true when found; sets aborted when the node bound is hit.
    bool dfs(const QVec& residual, std::size_t start, std::vector<std::int64_t>& counts) {
        if (is_zero(residual)) return true;
        if (++nodes_ > bound_) {
            aborted_ = true;
            return false;
        }
        if (failed_.count({residual, start})) return false;
        for (std::size_t i = start; i < gens_.size(); ++i) {
            QVec next = sub(residual, gens_[i]);
            if (functional_ && sgn(dot(*functional_, next)) < 0) continue;
            if (!rational_member(next, i)) continue;
            ++counts[i];
            if (dfs(next, i, counts)) return true;
            --counts[i];
            if (aborted_) return false;
        }
        failed_.insert({residual, start});
        return false;
    }

    void all(const QVec& residual, std::size_t start, std::vector<std::int64_t>& counts,
             std::vector<std::vector<std::int64_t>>& out, std::size_t limit) {
        if (out.size() >= limit) return;
        if (is_zero(residual)) {
            out.push_back(counts);
            return;
        }
        for (std::size_t i = start; i < gens_.size(); ++i) {
            QVec next = sub(residual, gens_[i]);
            if (sgn(dot(*functional_, next)) < 0) continue;
            if (!rational_member(next, i)) continue;
            ++counts[i];
            all(next, i, counts, out, limit);
            --counts[i];
        }
    }

    std::vector<QVec> gens_;
    std::optional<QVec> functional_;
    std::size_t bound_;
    std::size_t nodes_ = 0;
    bool aborted_ = false;
    std::set<std::pair<QVec, std::size_t>> failed_;
};

}  // namespace

MonoidResult monoid_member(const std::vector<IVec>& generators, const IVec& x, std::size_t node_bound) {
    MonoidResult res;
    std::vector<IVec> gens;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != x.size()) throw ConsistencyError("monoid_member: dimension mismatch");
        if (std::any_of(generators[i].begin(), generators[i].end(), [](auto v) { return v != 0; })) {
            gens.push_back(generators[i]);
            origin.push_back(i);
        }
    }
    res.coefficients.assign(generators.size(), 0);
    const QVec target = to_qvec(x);
    if (is_zero(target)) {
        res.status = Membership::Yes;
        return res;
    }
    MonoidSearch search(gens, node_bound);
    if (!search.rational_member(target, 0)) {
        res.status = Membership::No;
        return res;
    }
    search.functional_ = strict_point(search.gens_, x.size());
    std::vector<std::int64_t> counts(gens.size(), 0);
    const bool found = search.dfs(target, 0, counts);
    res.nodes = search.nodes_;
    if (found) {
        res.status = Membership::Yes;
        for (std::size_t i = 0; i < gens.size(); ++i) res.coefficients[origin[i]] = counts[i];
    } else if (search.aborted_ || !search.functional_) {
        res.status = Membership::Unknown;
    } else {
        res.status = Membership::No;
    }
    return res;
}

std::vector<std::vector<std::int64_t>> monoid_witnesses(const std::vector<IVec>& generators, const IVec& x,
                                                        std::size_t limit) {
    MonoidSearch search(generators, 0);
    search.functional_ = strict_point(search.gens_, x.size());
    if (!search.functional_) throw ConsistencyError("monoid_witnesses: generators admit no positive functional");
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> counts(generators.size(), 0);
    search.all(to_qvec(x), 0, counts, out, limit);
    return out;
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::Yes: return "yes";
        case Membership::No: return "no";
        case Membership::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace mcone
