#include "mcone/momentcone.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "mcone/errors.hpp"

namespace mcone {

namespace {

Provenance triple_provenance(std::string tag, const WeylElement& wtilde, const WeylElement& w, const WeylElement& v,
                             const QVec& ray) {
    return Provenance{std::move(tag), wtilde.word(), w.word(), v.word(), ray};
}

bool has_triple(const Provenance& p) { return p.tag == "triple" || p.tag == "scalar"; }

}  // namespace

std::string to_string(Mode m) {
    switch (m) {
        case Mode::Cone: return "cone";
        case Mode::Branching: return "branching";
        case Mode::Polytope: return "polytope";
        case Mode::Invariant: return "invariant";
        case Mode::Scalar: return "scalar";
        case Mode::ScalarBranching: return "scalar-branching";
    }
    return "?";
}

Mode parse_mode(const std::string& name) {
    for (Mode m : {Mode::Cone, Mode::Branching, Mode::Polytope, Mode::Invariant, Mode::Scalar, Mode::ScalarBranching})
        if (to_string(m) == name) return m;
    throw ConfigError("unknown mode '" + name +
                      "' (expected cone, branching, polytope, invariant, scalar or scalar-branching)");
}

MomentCone::MomentCone(const Embedding& e, MomentOptions options)
    : options_(options),
      calculus_(std::make_shared<const RelativeCalculus>(e.chamber_adjusted() ? e : e.make_compatible(),
                                                         options.group_bound)) {}

std::size_t MomentCone::source_dim() const { return static_cast<std::size_t>(embedding().source().dim()); }
std::size_t MomentCone::target_dim() const { return static_cast<std::size_t>(embedding().target().dim()); }

std::vector<std::string> MomentCone::variables() const {
    std::vector<std::string> names;
    const auto add = [&](const RootDatum& d, const std::string& stem) {
        for (int i = 0; i < d.rank(); ++i) names.push_back(stem + "_" + std::to_string(i + 1));
        for (int i = 0; i < d.central_rank(); ++i) names.push_back(stem + "_z" + std::to_string(i + 1));
    };
    add(embedding().source(), "lt");
    add(embedding().target(), "l");
    return names;
}

QVec MomentCone::join(const QVec& source_weight, const QVec& target_weight) const {
    if (source_weight.size() != source_dim() || target_weight.size() != target_dim())
        throw ConfigError("weight dimension mismatch: expected " + std::to_string(source_dim()) + " and " +
                          std::to_string(target_dim()) + " coordinates");
    return concat(source_weight, target_weight);
}

void MomentCone::check_budget() const {
    const Embedding& e = embedding();
    const BigInt work = e.source().weyl_order() * e.target().weyl_order() *
                        BigInt(static_cast<unsigned long>(e.cubicles().size()));
    if (work > BigInt(static_cast<unsigned long>(options_.triple_budget)))
        throw ResourceError("triple enumeration |W~||W||W^rel| = " + work.get_str() + " exceeds the budget " +
                            std::to_string(options_.triple_budget) + "; use the scalar generator instead");
}

void MomentCone::add_chamber_rows(InequalitySystem& s, bool source, bool target) const {
    const std::size_t n = source_dim() + target_dim();
    const Provenance tag{"chamber", {}, {}, {}, {}};
    if (source)
        for (int i = 0; i < embedding().source().rank(); ++i) s.add(unit(n, static_cast<std::size_t>(i)), 0, tag);
    if (target)
        for (int i = 0; i < embedding().target().rank(); ++i)
            s.add(unit(n, source_dim() + static_cast<std::size_t>(i)), 0, tag);
}

void MomentCone::add_center_rows(InequalitySystem& s, bool branching) const {
    const auto& cubicles = embedding().cubicles();
    if (cubicles.empty()) return;
    for (const QVec& line : cubicles.front().lineality) {
        const QVec row = concat(branching ? negate(line) : line, embedding().push(line));
        s.add_equality(row, 0, Provenance{"center-equality", {}, {}, {}, line});
    }
}

QVec MomentCone::row_for(const WeylElement& wtilde, const WeylElement& w, const QVec& ray, bool branching) const {
    const QVec source_part = embedding().source().act_coweight(wtilde, ray);
    const QVec target_part = embedding().target().act_coweight(w, embedding().push(ray));
    return concat(branching ? negate(source_part) : source_part, target_part);
}

std::vector<QualifyingTriple> MomentCone::triples(PairingVariant variant) const {
    check_budget();
    const auto labels = embedding().relative_weyl_set();
    std::vector<std::vector<QualifyingTriple>> buckets(labels.size());
    if (options_.threads > 1 && labels.size() > 1) {
        // Buckets are independent; merging in label order keeps the output deterministic.
        const std::size_t workers = std::min<std::size_t>(options_.threads, labels.size());
        std::vector<std::future<void>> jobs;
        for (std::size_t k = 0; k < workers; ++k)
            jobs.push_back(std::async(std::launch::async, [&, k] {
                for (std::size_t i = k; i < labels.size(); i += workers)
                    buckets[i] = calculus_->qualifying_triples(variant, labels[i]);
            }));
        for (auto& j : jobs) j.get();
    } else {
        for (std::size_t i = 0; i < labels.size(); ++i) buckets[i] = calculus_->qualifying_triples(variant, labels[i]);
    }
    std::vector<QualifyingTriple> out;
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return out;
}

InequalitySystem MomentCone::triple_system(PairingVariant variant) const {
    const bool branching = variant == PairingVariant::Polytope;
    InequalitySystem s(variables());
    std::map<Word, const Cubicle*> by_label;
    for (const auto& c : embedding().cubicles()) by_label.emplace(c.v.word(), &c);
    for (const auto& t : triples(variant)) {
        const Cubicle& cubicle = *by_label.at(t.v.word());
        for (const QVec& ray : cubicle.rays)
            s.add(row_for(t.wtilde, t.w, ray, branching), 0, triple_provenance("triple", t.wtilde, t.w, t.v, ray));
    }
    add_center_rows(s, branching);
    add_chamber_rows(s, true, true);
    s.canonicalize();
    return s;
}

InequalitySystem MomentCone::cone_inequalities() const { return triple_system(PairingVariant::Cone); }
InequalitySystem MomentCone::branching_inequalities() const { return triple_system(PairingVariant::Polytope); }

InequalitySystem MomentCone::polytope_inequalities(const QVec& lambda) const {
    if (lambda.size() != target_dim()) throw ConfigError("lambda has the wrong number of coordinates");
    if (!embedding().target().is_dominant_weight(lambda))
        throw ConfigError("lambda " + mcone::to_string(lambda) + " is not dominant");
    return slice_target(branching_inequalities(), lambda);
}

InequalitySystem MomentCone::invariant_inequalities() const {
    InequalitySystem s = slice_source(cone_inequalities(), zeros(source_dim()));
    s.canonicalize();
    return s;
}

InequalitySystem MomentCone::scalar_system(bool branching) const {
    InequalitySystem s(variables());
    for (const QVec& ray : embedding().all_rays()) {
        const RayData data = calculus_->ray_data(ray);
        for (const auto& p : calculus_->scalar_pairs(data))
            s.add(row_for(p.wtilde, p.w, ray, false), 0, triple_provenance("scalar", p.wtilde, p.w, data.v, ray));
    }
    add_center_rows(s, false);
    add_chamber_rows(s, true, true);
    if (branching) return switch_convention(s);
    s.canonicalize();
    return s;
}

InequalitySystem MomentCone::scalar_inequalities() const { return scalar_system(false); }
InequalitySystem MomentCone::scalar_branching_inequalities() const { return scalar_system(true); }

InequalitySystem MomentCone::generate(Mode mode, const std::optional<QVec>& lambda) const {
    switch (mode) {
        case Mode::Cone: return cone_inequalities();
        case Mode::Branching: return branching_inequalities();
        case Mode::Polytope:
            if (!lambda) throw ConfigError("polytope mode needs lambda");
            return polytope_inequalities(*lambda);
        case Mode::Invariant: return invariant_inequalities();
        case Mode::Scalar: return scalar_inequalities();
        case Mode::ScalarBranching: return scalar_branching_inequalities();
    }
    throw ConfigError("unknown mode");
}

InequalitySystem MomentCone::switch_convention(const InequalitySystem& s) const {
    if (s.dim() != source_dim() + target_dim()) throw ConsistencyError("switch_convention: dimension mismatch");
    const RootDatum& src = embedding().source();
    const WeylElement w0 = src.longest();
    const WeylElement w0_inv = src.inverse(w0);
    const auto ns = static_cast<std::ptrdiff_t>(source_dim());
    InequalitySystem out(s.variables());
    for (const auto& row : s.rows()) {
        const QVec a(row.coeffs.begin(), row.coeffs.begin() + ns);
        const QVec b(row.coeffs.begin() + ns, row.coeffs.end());
        const QVec coeffs = concat(negate(src.act_coweight(w0_inv, a)), b);
        for (auto p : row.provenance) {
            if (has_triple(p)) p.wtilde = src.multiply(w0, src.from_word(p.wtilde)).word();
            out.add(coeffs, row.rhs, std::move(p));
        }
    }
    out.canonicalize();
    return out;
}

InequalitySystem MomentCone::apply_duality(const InequalitySystem& s) const {
    if (s.dim() != source_dim() + target_dim()) throw ConsistencyError("apply_duality: dimension mismatch");
    const Embedding& e = embedding();
    const RootDatum& src = e.source();
    const RootDatum& tgt = e.target();
    const WeylElement sw0 = src.longest();
    const WeylElement tw0 = tgt.longest();
    const WeylElement sw0_inv = src.inverse(sw0);
    const WeylElement tw0_inv = tgt.inverse(tw0);
    const auto ns = static_cast<std::ptrdiff_t>(source_dim());
    InequalitySystem out(s.variables());
    for (const auto& row : s.rows()) {
        const QVec a(row.coeffs.begin(), row.coeffs.begin() + ns);
        const QVec b(row.coeffs.begin() + ns, row.coeffs.end());
        const QVec coeffs = concat(negate(src.act_coweight(sw0_inv, a)), negate(tgt.act_coweight(tw0_inv, b)));
        for (auto p : row.provenance) {
            if (has_triple(p)) {
                const WeylElement w = tgt.from_word(p.w);
                p.wtilde = e.dual_source(src.from_word(p.wtilde)).word();
                p.w = tgt.inverse(e.dual_target(tgt.inverse(w))).word();
                p.v = e.dual_target(tgt.from_word(p.v)).word();
                p.ray = negate(src.act_coweight(sw0, p.ray));
            } else if (p.tag == "center-equality") {
                p.ray = negate(src.act_coweight(sw0, p.ray));
            }
            out.add(coeffs, row.rhs, std::move(p));
        }
    }
    out.canonicalize();
    return out;
}

InequalitySystem MomentCone::slice_target(const InequalitySystem& s, const QVec& lambda) const {
    const auto ns = static_cast<std::ptrdiff_t>(source_dim());
    std::vector<std::string> names(s.variables().begin(), s.variables().begin() + ns);
    InequalitySystem out(std::move(names));
    for (const auto& row : s.rows()) {
        const QVec a(row.coeffs.begin(), row.coeffs.begin() + ns);
        const QVec b(row.coeffs.begin() + ns, row.coeffs.end());
        for (const auto& p : row.provenance) out.add(a, row.rhs - dot(b, lambda), p);
    }
    out.canonicalize();
    return out;
}

InequalitySystem MomentCone::slice_source(const InequalitySystem& s, const QVec& source_weight) const {
    const auto ns = static_cast<std::ptrdiff_t>(source_dim());
    std::vector<std::string> names(s.variables().begin() + ns, s.variables().end());
    InequalitySystem out(std::move(names));
    for (const auto& row : s.rows()) {
        const QVec a(row.coeffs.begin(), row.coeffs.begin() + ns);
        const QVec b(row.coeffs.begin() + ns, row.coeffs.end());
        for (const auto& p : row.provenance) out.add(b, row.rhs - dot(a, source_weight), p);
    }
    out.canonicalize();
    return out;
}

LatticeResult MomentCone::lattice_necessary(const QVec& source_weight, const QVec& target_weight,
                                            std::size_t node_bound) const {
    const Embedding& e = embedding();
    const RootDatum& src = e.source();
    const RootDatum& tgt = e.target();
    join(source_weight, target_weight);
    if (!is_integral(source_weight) || !is_integral(target_weight))
        throw ConfigError("the lattice condition needs integral weights");
    if (!src.is_dominant_weight(source_weight) || !tgt.is_dominant_weight(target_weight))
        throw ConfigError("the lattice condition needs dominant weights");

    std::map<Word, std::optional<std::vector<IVec>>> generators;  // nullopt: a non-integral generator
    for (const WeylElement& v : e.relative_weyl_set()) {
        std::vector<IVec> gens;
        bool integral = true;
        for (int i = 0; i < tgt.rank(); ++i) {
            const QVec g = e.pull(tgt.act_weight(v, tgt.simple_root(i)));
            if (is_zero(g)) continue;
            if (!is_integral(g)) integral = false;
            else gens.push_back(to_ivec(g));
        }
        generators.emplace(v.word(), integral ? std::optional(gens) : std::nullopt);
    }

    LatticeResult result{Membership::Yes, std::nullopt};
    std::map<std::pair<Word, QVec>, Membership> seen;
    for (const auto& t : triples(PairingVariant::Polytope)) {
        const QVec diff =
            sub(e.pull(tgt.act_weight(tgt.inverse(t.w), target_weight)), src.act_weight(src.inverse(t.wtilde), source_weight));
        const auto key = std::make_pair(t.v.word(), diff);
        auto it = seen.find(key);
        if (it == seen.end()) {
            Membership m = Membership::No;
            const auto& gens = generators.at(t.v.word());
            if (!gens) m = Membership::Unknown;
            else if (is_integral(diff)) m = monoid_member(*gens, to_ivec(diff), node_bound).status;
            it = seen.emplace(key, m).first;
        }
        if (it->second == Membership::Yes) continue;
        const Provenance where = triple_provenance("triple", t.wtilde, t.w, t.v, {});
        if (it->second == Membership::No) return {Membership::No, where};
        if (result.status == Membership::Yes) result = {Membership::Unknown, where};
    }
    return result;
}

InequalitySystem klyachko_inequalities(const RootDatum& group, int copies, const MomentOptions& options) {
    return MomentCone(diagonal_embedding(group, copies), options).scalar_inequalities();
}

std::pair<Rational, Rational> sl2_interval(const RootDatum& group, const std::vector<int>& dynkin_labels,
                                           const QVec& lambda) {
    if (static_cast<int>(dynkin_labels.size()) != group.rank() || lambda.size() != static_cast<std::size_t>(group.dim()))
        throw ConfigError("sl2_interval: label or weight dimension mismatch");
    if (!group.is_dominant_weight(lambda)) throw ConfigError("sl2_interval: lambda is not dominant");
    Rational top = 0;
    Rational peak = 0;
    for (int i = 0; i < group.rank(); ++i) {
        const int d = dynkin_labels[static_cast<std::size_t>(i)];
        top += d * dot(lambda, group.fundamental_coweight(i));
        if (d > 0) peak = std::max<Rational>(peak, d * lambda[static_cast<std::size_t>(i)]);
    }
    return {std::max<Rational>(0, peak - top), top};
}

InequalitySystem sl2_closed_form(const RootDatum& group, const std::vector<int>& dynkin_labels, const QVec& lambda) {
    const auto [low, high] = sl2_interval(group, dynkin_labels, lambda);
    InequalitySystem s({"lt_1"});
    const Provenance tag{"closed-form", {}, {}, {}, {}};
    s.add(QVec{1}, low, tag);
    s.add(QVec{-1}, -high, tag);
    s.canonicalize();
    return s;
}

}  // namespace mcone
