// Command-line front end: cubicles, inequalities, check and oracle-verify.
// Exit codes: 0 ok, 2 configuration error, 3 resource bound, 4 verification failure.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mcone/config.hpp"
#include "mcone/errors.hpp"
#include "mcone/momentcone.hpp"
#include "mcone/oracle.hpp"
#include "mcone/polyhedra.hpp"
#include "mcone/serialize.hpp"
#include "mcone/svg.hpp"

namespace {

using namespace mcone;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerification = 4;

struct Flags {
    std::string config;
    std::string output;
    std::string cache;
    unsigned threads = 1;
    bool prune = false;
    bool scalar = false;
    bool invariant = false;
    std::string polytope;
    std::string mode;
    std::string emit_svg;
    std::string lambda;
    std::string lambda_tilde;
    std::optional<int> max_n;
    std::optional<int> grid;
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << text;
}

void emit(const Json& j, const ProblemConfig& c, const Flags& f) {
    const std::string text = j.dump(2) + "\n";
    const std::string path = !f.output.empty() ? f.output : c.output_json;
    if (path.empty()) std::cout << text;
    else write_text(path, text);
}

std::string fnv_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string cache_dir(const Flags& f) {
    if (!f.cache.empty()) return f.cache;
    if (const char* env = std::getenv("MCONE_CACHE_DIR")) return env;
    return {};
}

std::string cache_path(const std::string& dir, const SchubertCalculus& s) {
    return (std::filesystem::path(dir) / ("schubert-" + fnv_hex(s.datum().fingerprint()) + ".json")).string();
}

void load_caches(const MomentCone& mc, const Flags& f) {
    const std::string dir = cache_dir(f);
    if (dir.empty()) return;
    for (const SchubertCalculus* s : {&mc.calculus().source(), &mc.calculus().target()}) s->load_cache(cache_path(dir, *s));
}

void save_caches(const MomentCone& mc, const Flags& f) {
    const std::string dir = cache_dir(f);
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    for (const SchubertCalculus* s : {&mc.calculus().source(), &mc.calculus().target()}) s->save_cache(cache_path(dir, *s));
}

MomentOptions options_from(const ProblemConfig& c, const Flags& f) {
    MomentOptions o;
    o.group_bound = c.bounds.schubert_group;
    o.triple_budget = c.bounds.triple_budget;
    o.threads = std::max(1u, f.threads);
    return o;
}

Json problem_json(const ProblemConfig& c) {
    return Json{{"name", c.name},
                {"config", c.echo},
                {"embedding", c.emb().description()},
                {"source", c.emb().source().label()},
                {"target", c.emb().target().label()},
                {"mode", to_string(c.mode)}};
}

void apply_overrides(ProblemConfig& c, const Flags& f) {
    int selectors = (f.scalar ? 1 : 0) + (f.invariant ? 1 : 0) + (f.polytope.empty() ? 0 : 1) + (f.mode.empty() ? 0 : 1);
    if (selectors > 1) throw ConfigError("--mode, --scalar, --invariant and --polytope are mutually exclusive");
    if (!f.mode.empty()) c.mode = parse_mode(f.mode);
    if (f.scalar) c.mode = Mode::Scalar;
    if (f.invariant) c.mode = Mode::Invariant;
    if (!f.polytope.empty()) {
        c.mode = Mode::Polytope;
        c.lambda = parse_weight_list(f.polytope);
    }
    if (f.prune) c.prune = true;
    if (!f.lambda.empty()) c.lambda = parse_weight_list(f.lambda);
    if (!f.lambda_tilde.empty()) c.lambda_tilde = parse_weight_list(f.lambda_tilde);
    if (f.max_n) c.bounds.scan_n = *f.max_n;
    if (f.grid) c.bounds.grid = *f.grid;
    if (!f.emit_svg.empty()) c.output_svg = f.emit_svg;
    if (c.mode == Mode::Polytope && !c.lambda) throw ConfigError("polytope mode needs lambda");
    if (c.lambda && c.lambda->size() != static_cast<std::size_t>(c.emb().target().dim()))
        throw ConfigError("lambda needs " + std::to_string(c.emb().target().dim()) + " coordinates");
    if (c.lambda_tilde && c.lambda_tilde->size() != static_cast<std::size_t>(c.emb().source().dim()))
        throw ConfigError("lambda_tilde needs " + std::to_string(c.emb().source().dim()) + " coordinates");
}

int cmd_cubicles(ProblemConfig& c, const Flags& f) {
    Json out{{"problem", problem_json(c)}, {"cubicles", cubicles_json(c.emb())}};
    emit(out, c, f);
    if (!c.output_svg.empty()) write_text(c.output_svg, cubicles_svg(c.emb()));
    return kExitOk;
}

bool duality_applies(Mode m) { return m != Mode::Polytope; }

int cmd_inequalities(ProblemConfig& c, const Flags& f) {
    const MomentCone mc(c.emb(), options_from(c, f));
    load_caches(mc, f);
    InequalitySystem system = mc.generate(c.mode, c.lambda);
    save_caches(mc, f);

    Json checks = Json::array();
    bool all_passed = true;
    const auto record = [&](const std::string& name, bool ok) {
        checks.push_back(Json{{"name", name}, {"passed", ok}});
        all_passed = all_passed && ok;
    };

    Json removed = Json::array();
    if (c.prune) {
        PruneResult pruned = prune_redundant(system);
        bool certified = true;
        for (const auto& r : pruned.removed) {
            certified = certified && verify_certificate(pruned.system.rows(), r.row, r.multipliers);
            removed.push_back(Json{{"row", inequality_json(r.row)}, {"multipliers", qvec_json(r.multipliers)}});
        }
        record("prune-certificates", certified);
        system = std::move(pruned.system);
    }
    if (duality_applies(c.mode)) {
        const InequalitySystem dual =
            c.mode == Mode::Invariant ? system : mc.apply_duality(system);
        if (c.mode != Mode::Invariant) record("duality-involution", systems_equivalent(dual, system));
    }

    Json out = system_json(system);
    out["problem"] = problem_json(c);
    out["pruned"] = c.prune;
    out["removed"] = removed;
    out["equivalences_checked"] = checks;
    emit(out, c, f);

    if (!c.output_svg.empty()) {
        if (c.mode == Mode::Polytope) {
            const auto vr = vertex_enumeration(system.constraints(), system.dim());
            write_text(c.output_svg, polygon_svg(c.emb(), vr.vertices, "moment polytope at " + to_string(*c.lambda)));
        } else {
            write_text(c.output_svg, cubicles_svg(c.emb()));
        }
    }
    return all_passed ? kExitOk : kExitVerification;
}

int cmd_check(ProblemConfig& c, const Flags& f) {
    if (!c.lambda || !c.lambda_tilde) throw ConfigError("check needs lambda and lambda_tilde");
    const MomentCone mc(c.emb(), options_from(c, f));
    load_caches(mc, f);
    const InequalitySystem system = mc.branching_inequalities();
    save_caches(mc, f);

    const QVec point = mc.join(*c.lambda_tilde, *c.lambda);
    Json tight = Json::array();
    Json violated = Json::array();
    bool boundary = false;
    for (const auto& row : system.rows()) {
        const int s = sgn(row.slack(point));
        if (s < 0) violated.push_back(inequality_json(row));
        if (s == 0) {
            tight.push_back(inequality_json(row));
            boundary = true;
        }
    }
    const bool inside = violated.empty();

    Json out{{"problem", problem_json(c)}, {"lambda", qvec_json(*c.lambda)}, {"lambda_tilde", qvec_json(*c.lambda_tilde)},
             {"inside", inside}, {"boundary", boundary}, {"tight_rows", tight}, {"violated_rows", violated}};

    const bool integral = is_integral(*c.lambda) && is_integral(*c.lambda_tilde);
    const bool dominant =
        c.emb().target().is_dominant_weight(*c.lambda) && c.emb().source().is_dominant_weight(*c.lambda_tilde);
    out["lattice"] = integral && dominant
                         ? to_string(mc.lattice_necessary(*c.lambda_tilde, *c.lambda, c.bounds.monoid_nodes).status)
                         : std::string("not-applicable");

    std::string summary = inside ? (boundary ? "inside (boundary)" : "inside") : "outside";
    bool sound = true;
    if (dominant) {
        const BranchingOracle oracle(c.emb(), c.bounds.oracle);
        Json scan = Json::array();
        std::string oracle_text;
        for (int n = 1; n <= c.bounds.scan_n; ++n) {
            const QVec a = scale(*c.lambda_tilde, Rational(n));
            const QVec b = scale(*c.lambda, Rational(n));
            if (!is_integral(a) || !is_integral(b)) continue;
            const std::int64_t m = oracle.multiplicity(to_ivec(a), to_ivec(b));
            scan.push_back(Json{{"n", n}, {"multiplicity", m}});
            oracle_text += (oracle_text.empty() ? ", oracle " : ", ") + std::string("n = ") + std::to_string(n) + ": " +
                           (m > 0 ? "positive" : "0");
            if (m > 0 && !inside) sound = false;
        }
        out["oracle_scan"] = scan;
        summary += oracle_text;
    }
    out["summary"] = summary;
    out["soundness"] = sound ? "ok" : "violated";
    emit(out, c, f);
    std::cerr << summary << '\n';
    return sound ? kExitOk : kExitVerification;
}

// All integral points of the box [0, bound]^rank with zero central coordinates.
std::vector<IVec> dominant_box(const RootDatum& d, int bound) {
    std::vector<IVec> out;
    IVec w(static_cast<std::size_t>(d.dim()), 0);
    const auto r = static_cast<std::size_t>(d.rank());
    for (;;) {
        out.push_back(w);
        std::size_t i = 0;
        while (i < r && w[i] == bound) w[i++] = 0;
        if (i == r) return out;
        ++w[i];
    }
}

int cmd_oracle_verify(ProblemConfig& c, const Flags& f) {
    const MomentCone mc(c.emb(), options_from(c, f));
    load_caches(mc, f);
    const InequalitySystem system = mc.branching_inequalities();
    save_caches(mc, f);
    const BranchingOracle oracle(c.emb(), c.bounds.oracle);

    std::size_t pairs = 0;
    std::size_t constituents = 0;
    std::size_t not_saturated = 0;
    Json violations = Json::array();
    Json misses = Json::array();
    const auto source_box = dominant_box(c.emb().source(), c.bounds.grid);
    for (const IVec& lambda : dominant_box(c.emb().target(), c.bounds.grid)) {
        for (const auto& [mu, m] : oracle.branching(lambda)) {
            ++constituents;
            if (!system.satisfies(mc.join(to_qvec(mu), to_qvec(lambda))))
                violations.push_back(Json{{"lambda", lambda}, {"lambda_tilde", mu}, {"multiplicity", m}});
        }
        for (const IVec& mu : source_box) {
            ++pairs;
            const QVec point = mc.join(to_qvec(mu), to_qvec(lambda));
            const bool strict = std::ranges::all_of(system.rows(), [&](const Inequality& row) { return sgn(row.slack(point)) > 0; });
            if (!strict || oracle.multiplicity(mu, lambda) > 0) continue;
            ++not_saturated;
            const ScanResult scan = saturation_scan(oracle, to_qvec(mu), to_qvec(lambda), c.bounds.scan_n);
            if (!scan.first) misses.push_back(Json{{"lambda", lambda}, {"lambda_tilde", mu}});
        }
    }
    const bool ok = violations.empty();
    Json out{{"problem", problem_json(c)},
             {"grid", c.bounds.grid},
             {"max_n", c.bounds.scan_n},
             {"pairs_scanned", pairs},
             {"constituents_checked", constituents},
             {"soundness_violations", violations},
             {"interior_zero_at_n1", not_saturated},
             {"saturation_misses", misses},
             {"status", ok ? "ok" : "soundness-violation"}};
    emit(out, c, f);
    std::cerr << (ok ? "zero discrepancies" : std::to_string(violations.size()) + " soundness violations") << '\n';
    return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moment cone inequalities for compact Lie group embeddings"};
    app.require_subcommand(1);
    Flags f;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--config", f.config, "problem configuration (JSON)")->required();
        sub->add_option("--output", f.output, "write JSON here instead of stdout");
        sub->add_option("--cache", f.cache, "Schubert representative cache directory (or MCONE_CACHE_DIR)");
        sub->add_option("--threads", f.threads, "worker threads for triple enumeration");
    };

    auto* cubicles = app.add_subcommand("cubicles", "projected roots, cubicles, relative Weyl set and lift");
    common(cubicles);
    cubicles->add_option("--emit-svg", f.emit_svg, "draw the cubicle subdivision (rank-2 sources)");

    auto* inequalities = app.add_subcommand("inequalities", "generate an inequality system");
    common(inequalities);
    inequalities->add_flag("--prune", f.prune, "remove LP-certified redundant rows");
    inequalities->add_flag("--scalar", f.scalar, "scalar generator over cubicle rays");
    inequalities->add_flag("--invariant", f.invariant, "invariant cone (lambda~ = 0 slice)");
    inequalities->add_option("--polytope", f.polytope, "moment polytope at lambda, e.g. \"1,0\"");
    inequalities->add_option("--mode", f.mode, "cone, branching, polytope, invariant, scalar or scalar-branching");
    inequalities->add_option("--emit-svg", f.emit_svg, "draw the polytope or the cubicles (rank-2 sources)");

    auto* check = app.add_subcommand("check", "membership of (lambda~, lambda) with oracle comparison");
    common(check);
    check->add_option("--lambda", f.lambda, "target weight, e.g. \"1,0,0,1\"");
    check->add_option("--lambda-tilde", f.lambda_tilde, "source weight");
    check->add_option("--max-n", f.max_n, "largest multiple for the oracle scan");

    auto* verify = app.add_subcommand("oracle-verify", "grid cross-validation of the inequalities against the oracle");
    common(verify);
    verify->add_option("--grid", f.grid, "coordinate bound of the grid");
    verify->add_option("--max-n", f.max_n, "largest multiple for saturation scans");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        ProblemConfig c = load_config(f.config);
        apply_overrides(c, f);
        if (cubicles->parsed()) return cmd_cubicles(c, f);
        if (inequalities->parsed()) return cmd_inequalities(c, f);
        if (check->parsed()) return cmd_check(c, f);
        return cmd_oracle_verify(c, f);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ResourceError& e) {
        std::cerr << "resource bound: " << e.what() << '\n';
        return kExitResource;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return kExitVerification;
    }
}
