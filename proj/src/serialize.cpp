#include "mcone/serialize.hpp"

#include "mcone/errors.hpp"

namespace mcone {

Json integer_json(const BigInt& n) {
    if (n.fits_slong_p()) return Json(n.get_si());
    return Json(n.get_str());
}

Json rational_json(const Rational& q) { return Json::array({integer_json(q.get_num()), integer_json(q.get_den())}); }

namespace {

BigInt integer_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw ConfigError("expected an integer, got " + j.dump());
}

}  // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(integer_from_json(j));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_array() && j.size() == 2) {
        const BigInt den = integer_from_json(j[1]);
        if (den == 0) throw ConfigError("zero denominator in " + j.dump());
        Rational q(integer_from_json(j[0]), den);
        q.canonicalize();
        return q;
    }
    throw ConfigError("expected a rational (integer, [num, den] or \"p/q\"), got " + j.dump());
}

Json qvec_json(const QVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_json(x));
    return out;
}

QVec qvec_from_json(const Json& j) {
    if (!j.is_array()) throw ConfigError("expected a vector, got " + j.dump());
    QVec out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

Json matrix_json(const QMat& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(qvec_json(m.row(i)));
    return out;
}

Json word_json(const Word& w) { return Json(word_to_string(w)); }

Json provenance_json(const Provenance& p) {
    Json j{{"tag", p.tag}};
    if (p.tag == "triple" || p.tag == "scalar" || p.tag == "dual") {
        j["wtilde"] = word_json(p.wtilde);
        j["w"] = word_json(p.w);
        j["v"] = word_json(p.v);
    }
    if (!p.ray.empty()) j["ray"] = qvec_json(p.ray);
    return j;
}

Json inequality_json(const Inequality& row) {
    Json num = Json::array();
    Json den = Json::array();
    for (const auto& c : row.coeffs) {
        num.push_back(integer_json(c.get_num()));
        den.push_back(integer_json(c.get_den()));
    }
    Json prov = Json::array();
    for (const auto& p : row.provenance) prov.push_back(provenance_json(p));
    return Json{{"coeffs_num", num}, {"coeffs_den", den}, {"rhs", rational_json(row.rhs)}, {"provenance", prov}};
}

Json system_json(const InequalitySystem& s) {
    Json rows = Json::array();
    for (const auto& r : s.rows()) rows.push_back(inequality_json(r));
    return Json{{"variables", s.variables()}, {"rows", rows}};
}

Json character_json(const Character& c) {
    Json entries = Json::array();
    for (const auto& [w, m] : c.multiplicities) entries.push_back(Json{{"weight", w}, {"multiplicity", m}});
    return Json{{"dimension", c.dimension()}, {"weights", entries}};
}

Json cubicles_json(const Embedding& e) {
    const RootDatum& t = e.target();
    const auto element_json = [&](const WeylElement& w) {
        Json j{{"word", word_json(w.word())}, {"length", w.length()}};
        if (t.permutation(w)) j["cycles"] = t.cycle_notation(w);
        return j;
    };

    Json projected = Json::array();
    for (const auto& pr : e.projected_roots())
        projected.push_back(Json{{"value", qvec_json(pr.value)}, {"multiplicity", pr.multiplicity()}});
    Json bar = Json::array();
    for (int i : e.bar_simple()) bar.push_back(i + 1);

    Json cubicles = Json::array();
    Json rel = Json::array();
    for (const auto& c : e.cubicles()) {
        Json rays = Json::array();
        for (const auto& r : c.rays) rays.push_back(qvec_json(r));
        Json lineality = Json::array();
        for (const auto& l : c.lineality) lineality.push_back(qvec_json(l));
        Json entry = element_json(c.v);
        entry["interior_point"] = qvec_json(c.interior_point);
        entry["rays"] = rays;
        entry["lineality"] = lineality;
        entry["dual"] = element_json(e.dual_target(c.v));
        cubicles.push_back(entry);
        rel.push_back(word_json(c.v.word()));
    }

    const LiftJ& j = e.lift();
    Json simple_images = Json::array();
    for (const auto& w : j.simple_images) simple_images.push_back(element_json(w));

    return Json{{"source", e.source().label()},
                {"target", t.label()},
                {"description", e.description()},
                {"pullback", matrix_json(e.pullback_matrix())},
                {"adjusting_element", element_json(e.adjusting_element())},
                {"projected_roots", projected},
                {"bar_simple", bar},
                {"cubicles", cubicles},
                {"relative_weyl_set", rel},
                {"lift", Json{{"simple_images", simple_images}, {"longest_image", element_json(j.longest_image)}}}};
}

}  // namespace mcone
