#include "mcone/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mcone/errors.hpp"

namespace mcone {

namespace {

void reject_unknown(const Json& object, const std::set<std::string>& allowed, const std::string& where) {
    if (!object.is_object()) throw ConfigError(where + " must be an object");
    for (const auto& [key, value] : object.items())
        if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

template <class T>
T get_as(const Json& j, const std::string& what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(what + " has the wrong type: " + j.dump());
    }
}

std::size_t get_bound(const Json& j, const std::string& what) {
    const auto v = get_as<std::int64_t>(j, what);
    if (v <= 0) throw ConfigError(what + " must be positive");
    return static_cast<std::size_t>(v);
}

RootDatum parse_group(const Json& j, std::size_t enumeration, const std::string& where) {
    if (j.is_string()) return RootDatum::from_type(j.get<std::string>(), enumeration);
    reject_unknown(j, {"cartan", "central", "label"}, where);
    if (!j.contains("cartan")) throw ConfigError(where + " needs a type string or a 'cartan' matrix");
    const auto rows = get_as<std::vector<IVec>>(j.at("cartan"), where + ".cartan");
    const int central = j.contains("central") ? get_as<int>(j.at("central"), where + ".central") : 0;
    const std::string label = j.contains("label") ? get_as<std::string>(j.at("label"), where + ".label") : "custom";
    return RootDatum::from_cartan(rows, central, label, enumeration);
}

QMat parse_matrix(const Json& j) {
    if (!j.is_array() || j.empty()) throw ConfigError("embedding.matrix must be a nonempty array of rows");
    std::vector<QVec> rows;
    for (const auto& r : j) rows.push_back(qvec_from_json(r));
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw ConfigError("embedding.matrix rows have different lengths");
    return QMat::from_rows(rows, rows.front().size());
}

Embedding parse_embedding(const Json& doc, const Bounds& bounds) {
    if (!doc.contains("embedding")) throw ConfigError("missing 'embedding'");
    const Json& e = doc.at("embedding");
    reject_unknown(e, {"kind", "matrix", "weights", "multiplicities", "copies", "labels"}, "embedding");
    if (!e.contains("kind")) throw ConfigError("embedding.kind is required");
    const auto kind = get_as<std::string>(e.at("kind"), "embedding.kind");
    const auto group = [&](const char* key) {
        if (!doc.contains(key)) throw ConfigError(std::string("embedding kind '") + kind + "' needs '" + key + "'");
        return parse_group(doc.at(key), bounds.enumeration, key);
    };
    const auto forbid = [&](const char* key) {
        if (doc.contains(key)) throw ConfigError(std::string("embedding kind '") + kind + "' derives '" + key + "'");
    };

    if (kind == "matrix") {
        if (!e.contains("matrix")) throw ConfigError("embedding.matrix is required for kind 'matrix'");
        return embedding_from_matrix(group("source"), group("target"), parse_matrix(e.at("matrix")));
    }
    if (kind == "identity") {
        forbid("target");
        return identity_embedding(group("source"));
    }
    if (kind == "torus") {
        forbid("source");
        return torus_embedding(group("target"));
    }
    if (kind == "diagonal") {
        forbid("target");
        const int copies = e.contains("copies") ? get_as<int>(e.at("copies"), "embedding.copies") : 2;
        if (copies < 1) throw ConfigError("embedding.copies must be positive");
        return diagonal_embedding(group("source"), copies);
    }
    if (kind == "sl2") {
        forbid("source");
        if (!e.contains("labels")) throw ConfigError("embedding.labels is required for kind 'sl2'");
        return sl2_embedding(group("target"), get_as<std::vector<int>>(e.at("labels"), "embedding.labels"));
    }
    if (kind == "weights") {
        forbid("target");
        if (!e.contains("weights")) throw ConfigError("embedding.weights is required for kind 'weights'");
        std::vector<WeightMultiplicity> weights;
        for (const auto& w : e.at("weights")) weights.push_back({qvec_from_json(w), 1});
        if (e.contains("multiplicities")) {
            const auto mult = get_as<std::vector<int>>(e.at("multiplicities"), "embedding.multiplicities");
            if (mult.size() != weights.size()) throw ConfigError("embedding.multiplicities has the wrong length");
            for (std::size_t i = 0; i < mult.size(); ++i) weights[i].multiplicity = mult[i];
        }
        return embedding_from_weights(group("source"), weights);
    }
    throw ConfigError("unknown embedding kind '" + kind +
                      "' (expected matrix, identity, torus, diagonal, sl2 or weights)");
}

}  // namespace

ProblemConfig parse_config(const Json& doc) {
    reject_unknown(doc, {"name", "source", "target", "embedding", "mode", "lambda", "lambda_tilde", "prune", "bounds",
                         "output"},
                   "the configuration");
    ProblemConfig c;
    c.echo = doc;
    if (doc.contains("name")) c.name = get_as<std::string>(doc.at("name"), "name");
    if (doc.contains("bounds")) {
        const Json& b = doc.at("bounds");
        reject_unknown(b, {"enumeration", "schubert_group", "triple_budget", "monoid_nodes", "oracle", "scan_n", "grid"},
                       "bounds");
        if (b.contains("enumeration")) c.bounds.enumeration = get_bound(b.at("enumeration"), "bounds.enumeration");
        if (b.contains("schubert_group"))
            c.bounds.schubert_group = get_bound(b.at("schubert_group"), "bounds.schubert_group");
        if (b.contains("triple_budget")) c.bounds.triple_budget = get_bound(b.at("triple_budget"), "bounds.triple_budget");
        if (b.contains("monoid_nodes")) c.bounds.monoid_nodes = get_bound(b.at("monoid_nodes"), "bounds.monoid_nodes");
        if (b.contains("oracle")) c.bounds.oracle = get_bound(b.at("oracle"), "bounds.oracle");
        if (b.contains("scan_n")) c.bounds.scan_n = static_cast<int>(get_bound(b.at("scan_n"), "bounds.scan_n"));
        if (b.contains("grid")) c.bounds.grid = get_as<int>(b.at("grid"), "bounds.grid");
        if (c.bounds.grid < 0) throw ConfigError("bounds.grid must be nonnegative");
    }
    c.embedding = parse_embedding(doc, c.bounds).make_compatible();
    if (doc.contains("mode")) c.mode = parse_mode(get_as<std::string>(doc.at("mode"), "mode"));
    if (doc.contains("lambda")) c.lambda = qvec_from_json(doc.at("lambda"));
    if (doc.contains("lambda_tilde")) c.lambda_tilde = qvec_from_json(doc.at("lambda_tilde"));
    if (doc.contains("prune")) c.prune = get_as<bool>(doc.at("prune"), "prune");
    if (doc.contains("output")) {
        const Json& o = doc.at("output");
        reject_unknown(o, {"json", "svg"}, "output");
        if (o.contains("json")) c.output_json = get_as<std::string>(o.at("json"), "output.json");
        if (o.contains("svg")) c.output_svg = get_as<std::string>(o.at("svg"), "output.svg");
    }
    const auto check_dim = [](const std::optional<QVec>& w, const RootDatum& d, const char* what) {
        if (w && w->size() != static_cast<std::size_t>(d.dim()))
            throw ConfigError(std::string(what) + " needs " + std::to_string(d.dim()) + " coordinates for " + d.label());
    };
    check_dim(c.lambda, c.emb().target(), "lambda");
    check_dim(c.lambda_tilde, c.emb().source(), "lambda_tilde");
    if (c.mode == Mode::Polytope && !c.lambda) throw ConfigError("mode 'polytope' needs 'lambda'");
    return c;
}

ProblemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration file " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("configuration " + path + " is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

QVec parse_weight_list(const std::string& text) {
    QVec out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ConfigError("empty weight list");
    return out;
}

}  // namespace mcone
