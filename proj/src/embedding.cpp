#include "mcone/embedding.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "mcone/errors.hpp"
#include "mcone/linalg.hpp"
#include "mcone/lp.hpp"
#include "mcone/polyhedra.hpp"

namespace mcone {

namespace {

constexpr std::size_t kGenericAttempts = 64;

const std::vector<long>& primes() {
    static const std::vector<long> table = [] {
        std::vector<long> p;
        for (long n = 2; p.size() < 4096; ++n) {
            bool prime = true;
            for (long q : p) {
                if (q * q > n) break;
                if (n % q == 0) {
                    prime = false;
                    break;
                }
            }
            if (prime) p.push_back(n);
        }
        return p;
    }();
    return table;
}

QMat to_qmat(const IMat& m) { return m.to_qmat(); }

std::string root_name(const Root& r) {
    std::string s = "alpha(";
    for (std::size_t i = 0; i < r.simple_coeffs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r.simple_coeffs[i]);
    }
    return s + ")";
}

}  // namespace

struct Embedding::State {
    RootDatum source;
    RootDatum target;
    QMat pullback;
    std::string description;
    bool adjusted = false;
    std::optional<WeylElement> adjusting;

    std::once_flag cubicles_once;
    std::vector<Cubicle> cubicles;
    std::once_flag lift_once;
    LiftJ lift;

    State(RootDatum s, RootDatum t, QMat m, std::string d)
        : source(std::move(s)), target(std::move(t)), pullback(std::move(m)), description(std::move(d)) {}
};

std::shared_ptr<Embedding::State> Embedding::make_state(RootDatum source, RootDatum target, QMat pullback,
                                                        std::string description) {
    if (pullback.rows() != static_cast<std::size_t>(source.dim()) ||
        pullback.cols() != static_cast<std::size_t>(target.dim()))
        throw ConfigError("embedding matrix must be " + std::to_string(source.dim()) + "x" +
                          std::to_string(target.dim()) + " (source dimension x target dimension)");
    if (rank(pullback) != static_cast<std::size_t>(source.dim())) {
        const auto kernel = nullspace(pullback.transpose());
        throw ConfigError("push-forward is not injective; kernel vector " + to_string(kernel.front()));
    }
    auto state = std::make_shared<State>(std::move(source), std::move(target), std::move(pullback),
                                         std::move(description));
    state->adjusting = state->target.identity();
    return state;
}

Embedding::Embedding(RootDatum source, RootDatum target, QMat pullback, std::string description)
    : state_(make_state(std::move(source), std::move(target), std::move(pullback), std::move(description))) {}

const RootDatum& Embedding::source() const { return state_->source; }
const RootDatum& Embedding::target() const { return state_->target; }
const QMat& Embedding::pullback_matrix() const { return state_->pullback; }
QMat Embedding::push_matrix() const { return state_->pullback.transpose(); }
const std::string& Embedding::description() const { return state_->description; }
bool Embedding::chamber_adjusted() const { return state_->adjusted; }
const WeylElement& Embedding::adjusting_element() const { return *state_->adjusting; }

QVec Embedding::pull(const QVec& target_weight) const { return state_->pullback.apply(target_weight); }

QVec Embedding::push(const QVec& source_coweight) const {
    const QMat& m = state_->pullback;
    if (source_coweight.size() != m.rows()) throw ConsistencyError("push: dimension mismatch");
    QVec out = zeros(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (sgn(source_coweight[i]) == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) out[j] += m(i, j) * source_coweight[i];
    }
    return out;
}

QVec Embedding::test_point(std::size_t attempt) const {
    const RootDatum& s = source();
    const auto d = static_cast<std::size_t>(s.dim());
    const auto& p = primes();
    const std::size_t base = (attempt * d) % (p.size() - d);
    QVec xi = zeros(d);
    for (int i = 0; i < s.rank(); ++i) xi = add(xi, scale(s.fundamental_coweight(i), Rational(p[base + i])));
    for (std::size_t k = static_cast<std::size_t>(s.rank()); k < d; ++k) xi[k] = Rational(p[base + k]);
    return xi;
}

bool Embedding::is_generic(const QVec& source_coweight, std::string* vanishing_root) const {
    const QVec image = push(source_coweight);
    for (const auto& root : target().positive_roots()) {
        if (is_zero(pull(root.weight))) continue;
        if (sgn(dot(root.weight, image)) == 0) {
            if (vanishing_root) *vanishing_root = root_name(root);
            return false;
        }
    }
    return true;
}

QVec Embedding::generic_point() const {
    for (std::size_t attempt = 0; attempt < kGenericAttempts; ++attempt) {
        QVec xi = test_point(attempt);
        if (is_generic(xi)) return xi;
    }
    throw ConsistencyError("no generic test point found after " + std::to_string(kGenericAttempts) + " attempts");
}

bool Embedding::is_compatible() const {
    std::vector<QVec> rows;
    for (int i = 0; i < source().rank(); ++i) rows.push_back(source().simple_root(i));
    for (int j = 0; j < target().rank(); ++j) {
        QVec p = pull(target().simple_root(j));
        if (!is_zero(p)) rows.push_back(std::move(p));
    }
    return strictly_feasible(rows, static_cast<std::size_t>(source().dim()));
}

Embedding Embedding::make_compatible(const std::optional<QVec>& generic_source_coweight) const {
    if (state_->adjusted && !generic_source_coweight) return *this;
    WeylElement u = target().identity();
    if (generic_source_coweight) {
        const QVec& xi = *generic_source_coweight;
        if (xi.size() != static_cast<std::size_t>(source().dim()))
            throw ConfigError("generic coweight has the wrong dimension");
        for (int i = 0; i < source().rank(); ++i)
            if (sgn(source().root_value(i, xi)) <= 0)
                throw ConfigError("generic coweight is not interior to the source chamber (simple root " +
                                  std::to_string(i + 1) + ")");
        std::string root;
        if (!is_generic(xi, &root)) throw ConfigError("generic coweight is not generic: " + root + " vanishes");
        u = target().to_dominant_coweight(push(xi)).second;
    } else if (!is_compatible()) {
        u = target().to_dominant_coweight(push(generic_point())).second;
    }
    QMat rebased = state_->pullback * to_qmat(u.matrix());
    auto state = std::make_shared<State>(source(), target(), std::move(rebased), state_->description);
    state->adjusted = true;
    state->adjusting = target().multiply(*state_->adjusting, u);
    Embedding out(std::move(state));
    if (!out.is_compatible()) throw ConsistencyError("chamber adjustment did not produce compatible chambers");
    return out;
}

std::vector<ProjectedRoot> Embedding::projected_roots() const {
    std::vector<ProjectedRoot> out;
    const auto& roots = target().positive_roots();
    for (std::size_t k = 0; k < roots.size(); ++k) {
        QVec p = pull(roots[k].weight);
        if (is_zero(p)) continue;
        auto it = std::find_if(out.begin(), out.end(), [&](const ProjectedRoot& pr) { return pr.value == p; });
        if (it == out.end()) out.push_back({std::move(p), {k}});
        else it->roots.push_back(k);
    }
    return out;
}

std::vector<std::size_t> Embedding::bar_roots() const {
    std::vector<std::size_t> out;
    const auto& roots = target().positive_roots();
    for (std::size_t k = 0; k < roots.size(); ++k)
        if (is_zero(pull(roots[k].weight))) out.push_back(k);
    return out;
}

std::vector<int> Embedding::bar_simple() const {
    std::vector<int> out;
    for (int i = 0; i < target().rank(); ++i)
        if (is_zero(pull(target().simple_root(i)))) out.push_back(i);
    return out;
}

std::vector<WeylElement> Embedding::bar_weyl() const { return target().parabolic_subgroup(bar_simple()); }

std::vector<Cubicle> Embedding::compute_cubicles() const {
    if (!chamber_adjusted()) throw ConsistencyError("cubicles require a chamber-adjusted embedding");
    const auto dim = static_cast<std::size_t>(source().dim());
    std::set<QVec> hyperplane_set;
    for (const auto& pr : projected_roots()) {
        QVec h = primitive(pr.value);
        std::size_t k = 0;
        while (sgn(h[k]) == 0) ++k;
        if (sgn(h[k]) < 0) h = negate(h);
        hyperplane_set.insert(std::move(h));
    }
    std::vector<std::vector<QVec>> regions(1);
    for (int i = 0; i < source().rank(); ++i) regions[0].push_back(source().simple_root(i));
    for (const auto& h : hyperplane_set) {
        std::vector<std::vector<QVec>> next;
        for (const auto& region : regions)
            for (const QVec& side : {h, negate(h)}) {
                auto rows = region;
                rows.push_back(side);
                if (strictly_feasible(rows, dim)) next.push_back(std::move(rows));
            }
        regions = std::move(next);
    }

    const std::vector<int> sbar = bar_simple();
    std::vector<Cubicle> out;
    for (const auto& region : regions) {
        const Cone closed = cone_from_inequalities(region, {}, dim, std::max(dim, kDefaultDualizeDim));
        Cubicle c;
        c.rays = closed.rays;
        c.lineality = closed.lineality;
        c.interior_point = zeros(dim);
        for (const auto& r : c.rays) c.interior_point = add(c.interior_point, r);
        const WeylElement u = target().to_dominant_coweight(push(c.interior_point)).second;
        c.v = target().min_coset_rep(u, sbar, CosetSide::Left);
        for (const auto& root : target().positive_roots())
            c.dual_generators.push_back(pull(target().act_weight(c.v, root.weight)));
        const Cone dual_side = cone_from_inequalities(c.dual_generators, {}, dim, std::max(dim, kDefaultDualizeDim));
        if (!(dual_side == closed))
            throw ConsistencyError("cubicle for v = " + word_to_string(c.v.word()) +
                                   " disagrees with the dual of its projected root cone");
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Cubicle& a, const Cubicle& b) { return a.v < b.v; });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].v == out[i - 1].v) throw ConsistencyError("two cubicles share the Weyl element " +
                                                             word_to_string(out[i].v.word()));
    return out;
}

const std::vector<Cubicle>& Embedding::cubicles() const {
    std::call_once(state_->cubicles_once, [this] { state_->cubicles = compute_cubicles(); });
    return state_->cubicles;
}

std::vector<WeylElement> Embedding::relative_weyl_set() const {
    std::vector<WeylElement> out;
    for (const auto& c : cubicles()) out.push_back(c.v);
    return out;
}

std::vector<std::size_t> Embedding::cubicles_containing(const QVec& source_coweight) const {
    std::vector<std::size_t> out;
    const auto& cs = cubicles();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const bool inside = std::all_of(cs[k].dual_generators.begin(), cs[k].dual_generators.end(),
                                        [&](const QVec& g) { return sgn(dot(g, source_coweight)) >= 0; });
        if (inside) out.push_back(k);
    }
    return out;
}

std::vector<QVec> Embedding::all_rays() const {
    std::set<QVec> rays;
    for (const auto& c : cubicles()) rays.insert(c.rays.begin(), c.rays.end());
    return {rays.begin(), rays.end()};
}

LiftJ Embedding::compute_lift() const {
    if (!chamber_adjusted()) throw ConsistencyError("the lift requires a chamber-adjusted embedding");
    const RootDatum& s = source();
    const RootDatum& t = target();
    const std::vector<int> sbar = bar_simple();
    const QVec xi = generic_point();
    const QMat push_m = push_matrix();

    auto preserves_sbar = [&](const WeylElement& w) {
        for (int i : sbar) {
            const QVec image = t.act_weight(w, t.simple_root(i));
            if (std::none_of(sbar.begin(), sbar.end(), [&](int k) { return image == t.simple_root(k); }))
                return false;
        }
        return true;
    };

    LiftJ lift;
    for (int i = 0; i < s.rank(); ++i) {
        const WeylElement si = s.simple_reflection(i);
        const auto [d1, u1] = t.to_dominant_coweight(push(xi));
        const auto [d2, u2] = t.to_dominant_coweight(push(s.act_coweight(si, xi)));
        if (d1 != d2) throw ConsistencyError("lift: reflected test point left the target Weyl orbit");
        const std::vector<int> stabilizer = t.face_of(d1).vanishing;
        std::vector<WeylElement> candidates;
        const WeylElement u1_inv = t.inverse(u1);
        for (const auto& x : t.parabolic_subgroup(stabilizer)) {
            WeylElement w = t.multiply(t.multiply(u2, x), u1_inv);
            if (preserves_sbar(w) && std::find(candidates.begin(), candidates.end(), w) == candidates.end())
                candidates.push_back(std::move(w));
        }
        if (candidates.size() != 1)
            throw ConsistencyError("lift of s" + std::to_string(i + 1) + " has " + std::to_string(candidates.size()) +
                                   " base-preserving candidates");
        const WeylElement& w = candidates.front();
        if (!(push_m * to_qmat(si.coweight_matrix()) == to_qmat(w.coweight_matrix()) * push_m))
            throw ConsistencyError("lift of s" + std::to_string(i + 1) + " is not equivariant");
        lift.simple_images.push_back(w);
    }
    WeylElement longest = t.identity();
    const WeylElement source_longest = s.longest();
    for (int i : source_longest.word()) longest = t.multiply(longest, lift.simple_images[static_cast<std::size_t>(i)]);
    lift.longest_image = longest;
    return lift;
}

const LiftJ& Embedding::lift() const {
    std::call_once(state_->lift_once, [this] { state_->lift = compute_lift(); });
    return state_->lift;
}

WeylElement Embedding::lift_element(const WeylElement& source_element) const {
    const LiftJ& j = lift();
    WeylElement w = target().identity();
    for (int i : source_element.word()) w = target().multiply(w, j.simple_images[static_cast<std::size_t>(i)]);
    return w;
}

WeylElement Embedding::dual_target(const WeylElement& w) const {
    return target().multiply(target().multiply(lift().longest_image, w), target().longest());
}

WeylElement Embedding::dual_source(const WeylElement& w) const {
    const WeylElement w0 = source().longest();
    return source().multiply(source().multiply(w0, w), w0);
}

Embedding embedding_from_matrix(const RootDatum& source, const RootDatum& target, const QMat& pullback) {
    return Embedding(source, target, pullback, "matrix");
}

Embedding identity_embedding(const RootDatum& group) {
    return Embedding(group, group, QMat::identity(static_cast<std::size_t>(group.dim())), "identity");
}

Embedding torus_embedding(const RootDatum& group) {
    const RootDatum torus = RootDatum::from_type("T" + std::to_string(group.dim()), group.enumeration_bound());
    return Embedding(torus, group, QMat::identity(static_cast<std::size_t>(group.dim())), "torus");
}

Embedding diagonal_embedding(const RootDatum& group, int copies) {
    if (copies < 1) throw ConfigError("diagonal embedding needs at least one copy");
    if (copies == 1) return Embedding(group, group, QMat::identity(static_cast<std::size_t>(group.dim())), "diagonal 1");
    const RootDatum target = RootDatum::product(std::vector<RootDatum>(static_cast<std::size_t>(copies), group));
    const int r = group.rank(), c = group.central_rank();
    QMat m(static_cast<std::size_t>(group.dim()), static_cast<std::size_t>(target.dim()));
    for (int l = 0; l < copies; ++l) {
        for (int i = 0; i < r; ++i) m(i, l * r + i) = 1;
        for (int k = 0; k < c; ++k) m(r + k, copies * r + l * c + k) = 1;
    }
    return Embedding(group, target, std::move(m), "diagonal " + std::to_string(copies));
}

Embedding sl2_embedding(const RootDatum& group, const std::vector<int>& dynkin_labels) {
    if (dynkin_labels.size() != static_cast<std::size_t>(group.rank()))
        throw ConfigError("sl2 embedding needs one label per simple root of " + group.label());
    QVec h = zeros(static_cast<std::size_t>(group.dim()));
    std::string labels;
    for (int i = 0; i < group.rank(); ++i) {
        const int d = dynkin_labels[static_cast<std::size_t>(i)];
        if (d < 0 || d > 2) throw ConfigError("sl2 labels must be 0, 1 or 2");
        h = add(h, scale(group.fundamental_coweight(i), Rational(d)));
        labels += (i ? "," : "") + std::to_string(d);
    }
    if (is_zero(h)) throw ConfigError("sl2 labels are all zero");
    const RootDatum a1 = RootDatum::from_type("A1", group.enumeration_bound());
    QMat m(1, static_cast<std::size_t>(group.dim()));
    for (std::size_t j = 0; j < h.size(); ++j) m(0, j) = h[j];
    return Embedding(a1, group, std::move(m), "sl2 (" + labels + ")");
}

std::vector<QVec> order_weights(const RootDatum& source, const std::vector<WeightMultiplicity>& weights) {
    QVec rho_vee = zeros(static_cast<std::size_t>(source.dim()));
    for (int i = 0; i < source.rank(); ++i) rho_vee = add(rho_vee, source.fundamental_coweight(i));
    std::vector<QVec> list;
    for (const auto& wm : weights) {
        if (wm.weight.size() != static_cast<std::size_t>(source.dim()))
            throw ConfigError("weight " + to_string(wm.weight) + " has the wrong dimension");
        if (wm.multiplicity < 0) throw ConfigError("negative weight multiplicity");
        for (int k = 0; k < wm.multiplicity; ++k) list.push_back(wm.weight);
    }
    std::stable_sort(list.begin(), list.end(), [&](const QVec& a, const QVec& b) {
        const Rational ha = dot(a, rho_vee), hb = dot(b, rho_vee);
        if (ha != hb) return ha > hb;
        return a > b;
    });
    return list;
}

Embedding embedding_from_weights(const RootDatum& source, const std::vector<WeightMultiplicity>& weights) {
    const std::vector<QVec> mu = order_weights(source, weights);
    if (mu.empty()) throw ConfigError("weight multiset is empty");
    const std::size_t n = mu.size();
    if (n > 21) throw ConfigError("weight multiset of size " + std::to_string(n) + " exceeds U(21)");
    const RootDatum target = n == 1 ? RootDatum::from_type("T1", source.enumeration_bound())
                                    : RootDatum::from_type("A" + std::to_string(n - 1) + "+u1", source.enumeration_bound());
    const auto d = static_cast<std::size_t>(source.dim());
    QVec total = zeros(d);
    for (const auto& m : mu) total = add(total, m);
    QMat m(d, n);
    QVec partial = zeros(d);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        partial = add(partial, mu[i]);
        const QVec col = sub(partial, scale(total, Rational(static_cast<long>(i + 1)) / static_cast<long>(n)));
        for (std::size_t k = 0; k < d; ++k) m(k, i) = col[k];
    }
    for (std::size_t k = 0; k < d; ++k) m(k, n - 1) = total[k] / static_cast<long>(n);
    return Embedding(source, target, std::move(m), "weights");
}

}  // namespace mcone
