#include "mcone/schubert.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "mcone/errors.hpp"

namespace mcone {

void CohomologyClass::add(const WeylElement& w, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational CohomologyClass::coefficient(const WeylElement& w) const {
    const auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

CohomologyClass CohomologyClass::operator+(const CohomologyClass& o) const {
    CohomologyClass r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, c);
    return r;
}

CohomologyClass CohomologyClass::operator-(const CohomologyClass& o) const { return *this + o.scaled(-1); }

CohomologyClass CohomologyClass::scaled(const Rational& c) const {
    CohomologyClass r;
    for (const auto& [w, v] : terms_) r.add(w, v * c);
    return r;
}

CohomologyClass CohomologyClass::degree_part(int length) const {
    CohomologyClass r;
    for (const auto& [w, c] : terms_)
        if (w.length() == length) r.add(w, c);
    return r;
}

std::string CohomologyClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (c != 1) out << c.get_str() << "*";
        out << word_to_string(w.word());
    }
    return out.str();
}

SchubertCalculus::SchubertCalculus(RootDatum datum, std::size_t group_bound) : datum_(std::move(datum)) {
    if (datum_.weyl_order() > BigInt(static_cast<unsigned long>(group_bound)))
        throw ResourceError("Schubert calculus for " + datum_.label() + " (|W| = " + datum_.weyl_order().get_str() +
                            ") exceeds the bound " + std::to_string(group_bound) +
                            "; use the scalar workflow or a smaller group");
    const WeylElement w0 = datum_.longest();
    if (!(extract(representative(w0)) == schubert(w0)))
        throw ConsistencyError("top class calibration failed for " + datum_.label());
    for (int i = 0; i < datum_.rank(); ++i) {
        const WeylElement s = datum_.simple_reflection(i);
        if (!(extract(representative(s)) == schubert(s)))
            throw ConsistencyError("degree-one calibration failed for " + datum_.label() + " at s" +
                                   std::to_string(i + 1));
    }
}

Polynomial SchubertCalculus::reflect(int i, const Polynomial& p) const {
    QVec form = zeros(nvars());
    form[static_cast<std::size_t>(i)] = 1;
    for (int j = 0; j < datum_.rank(); ++j) form[static_cast<std::size_t>(j)] -= datum_.cartan(i, j);
    return p.substitute_variable(static_cast<std::size_t>(i), form);
}

Polynomial SchubertCalculus::act(const WeylElement& w, const Polynomial& p) const {
    const IMat c = datum_.inverse(w).coweight_matrix();
    std::vector<QVec> images(nvars(), zeros(nvars()));
    for (std::size_t k = 0; k < nvars(); ++k)
        for (std::size_t m = 0; m < nvars(); ++m) images[k][m] = Rational(static_cast<long>(c(k, m)));
    return p.substitute(images, nvars());
}

Polynomial SchubertCalculus::divided_difference(int i, const Polynomial& p) const {
    return (p - reflect(i, p)).divide_linear(datum_.simple_root(i));
}

Polynomial SchubertCalculus::representative(const WeylElement& w) const {
    {
        std::lock_guard lock(memo_mutex_);
        const auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
    }
    Polynomial p(nvars());
    std::optional<int> up;
    for (int j = 0; j < datum_.rank() && !up; ++j)
        if (!datum_.is_right_descent(w, j)) up = j;
    if (!up) {
        p = Polynomial::constant(nvars(), 1);
        for (const auto& root : datum_.positive_roots()) p = p * weight_form(root.weight);
        p = p.scaled(Rational(1) / Rational(datum_.weyl_order()));
    } else {
        p = divided_difference(*up, representative(datum_.multiply(w, datum_.simple_reflection(*up))));
    }
    std::lock_guard lock(memo_mutex_);
    return memo_.emplace(w, std::move(p)).first->second;
}

Polynomial SchubertCalculus::representative(const CohomologyClass& x) const {
    Polynomial p(nvars());
    for (const auto& [w, c] : x.terms()) p += representative(w).scaled(c);
    return p;
}

CohomologyClass SchubertCalculus::extract(const Polynomial& p) const {
    if (p.nvars() != nvars()) throw ConsistencyError("extract: polynomial has the wrong variable count");
    CohomologyClass out;
    const int top = std::min(p.degree(), datum_.longest().length());
    for (int d = 0; d <= top; ++d) {
        Polynomial pd = p.homogeneous_part(d);
        if (pd.is_zero()) continue;
        // level[x] = D applied along the canonical word of x, first letter first.
        std::map<WeylElement, Polynomial> level{{datum_.identity(), std::move(pd)}};
        for (int step = 0; step < d; ++step) {
            std::map<WeylElement, Polynomial> next;
            for (const auto& [x, q] : level) {
                if (q.is_zero()) continue;
                for (int j = 0; j < datum_.rank(); ++j) {
                    if (datum_.is_right_descent(x, j)) continue;
                    WeylElement y = datum_.multiply(x, datum_.simple_reflection(j));
                    if (next.count(y)) continue;
                    next.emplace(std::move(y), divided_difference(j, q));
                }
            }
            level = std::move(next);
        }
        for (const auto& [x, q] : level) {
            if (q.degree() > 0) throw ConsistencyError("extract: non-constant residue");
            out.add(datum_.inverse(x), q.constant_term());
        }
    }
    return out;
}

CohomologyClass SchubertCalculus::schubert(const WeylElement& w) const {
    CohomologyClass c;
    c.add(w, 1);
    return c;
}

CohomologyClass SchubertCalculus::theta(const QVec& weight) const { return extract(weight_form(weight)); }

CohomologyClass SchubertCalculus::chevalley(const QVec& weight, const CohomologyClass& x) const {
    CohomologyClass out;
    for (const auto& [w, c] : x.terms())
        for (const auto& root : datum_.positive_roots()) {
            const Rational pairing = dot(weight, root.coroot);
            if (sgn(pairing) == 0) continue;
            const WeylElement y = datum_.multiply(w, datum_.reflection(root));
            if (y.length() == w.length() + 1) out.add(y, c * pairing);
        }
    return out;
}

CohomologyClass SchubertCalculus::reflect_class(int i, const CohomologyClass& x) const {
    // s_i sigma_w = sigma_w - Theta(alpha_i) D_i sigma_w
    CohomologyClass lowered;
    for (const auto& [w, c] : x.terms())
        if (datum_.is_right_descent(w, i)) lowered.add(datum_.multiply(w, datum_.simple_reflection(i)), c);
    return x - chevalley(datum_.simple_root(i), lowered);
}

CohomologyClass SchubertCalculus::act(const WeylElement& w, const CohomologyClass& x) const {
    CohomologyClass out = x;
    for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) out = reflect_class(*it, out);
    return out;
}

CohomologyClass SchubertCalculus::multiply(const CohomologyClass& a, const CohomologyClass& b) const {
    return extract(representative(a) * representative(b));
}

void SchubertCalculus::save_cache(const std::string& path) const {
    nlohmann::json j;
    j["format_version"] = kSchubertCacheVersion;
    j["fingerprint"] = datum_.fingerprint();
    nlohmann::json reps = nlohmann::json::array();
    std::lock_guard lock(memo_mutex_);
    for (const auto& [w, p] : memo_) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
        reps.push_back({{"word", w.word()}, {"terms", terms}});
    }
    j["representatives"] = std::move(reps);
    std::ofstream out(path);
    if (!out) throw ResourceError("cannot write Schubert cache " + path);
    out << j.dump() << '\n';
}

bool SchubertCalculus::load_cache(const std::string& path) const {
    std::ifstream in(path);
    if (!in) return false;
    std::map<WeylElement, Polynomial> loaded;
    try {
        const nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("format_version").get<int>() != kSchubertCacheVersion) return false;
        if (j.at("fingerprint").get<std::string>() != datum_.fingerprint()) return false;
        for (const auto& rep : j.at("representatives")) {
            const Word word = rep.at("word").get<Word>();
            Polynomial p(nvars());
            for (const auto& t : rep.at("terms")) {
                const auto e = t.at("e").get<Polynomial::Exponents>();
                if (e.size() != nvars()) return false;
                Rational c(BigInt(t.at("num").get<std::string>()), BigInt(t.at("den").get<std::string>()));
                if (c.get_den() == 0) return false;
                c.canonicalize();
                p.add_term(e, c);
            }
            loaded.emplace(datum_.from_word(word), std::move(p));
        }
    } catch (const std::exception&) {
        return false;
    }
    std::lock_guard lock(memo_mutex_);
    for (auto& [w, p] : loaded) memo_.insert_or_assign(w, std::move(p));
    return true;
}

CohomologyClass phi_star(const Embedding& e, const SchubertCalculus& source, const SchubertCalculus& target,
                         const CohomologyClass& x) {
    const QMat& m = e.pullback_matrix();
    std::vector<QVec> images;
    for (std::size_t j = 0; j < m.cols(); ++j) images.push_back(m.col(j));
    return source.extract(target.representative(x).substitute(images, source.nvars()));
}

RelativeCalculus::RelativeCalculus(Embedding e, std::size_t group_bound)
    : embedding_(std::move(e)),
      source_(std::make_shared<SchubertCalculus>(embedding_.source(), group_bound)),
      target_(std::make_shared<SchubertCalculus>(embedding_.target(), group_bound)) {
    if (!embedding_.chamber_adjusted()) throw ConsistencyError("relative calculus requires a chamber-adjusted embedding");
}

CohomologyClass RelativeCalculus::pulled(const WeylElement& v, const WeylElement& u) const {
    const auto key = std::make_pair(v, u);
    {
        std::lock_guard lock(pulled_mutex_);
        const auto it = pulled_.find(key);
        if (it != pulled_.end()) return it->second;
    }
    CohomologyClass c = phi_star(embedding_, *source_, *target_, target_->act(v, target_->schubert(u)));
    std::lock_guard lock(pulled_mutex_);
    return pulled_.emplace(key, std::move(c)).first->second;
}

Rational RelativeCalculus::triple_coefficient(const WeylElement& wtilde, const WeylElement& w, const WeylElement& v,
                                              PairingVariant variant) const {
    const RootDatum& s = source_->datum();
    const RootDatum& t = target_->datum();
    const WeylElement u = t.multiply(w, v);
    const WeylElement x = variant == PairingVariant::Cone ? s.multiply(s.longest(), wtilde) : wtilde;
    if (x.length() != u.length()) return 0;
    return pulled(v, u).coefficient(x);
}

std::vector<QualifyingTriple> RelativeCalculus::qualifying_triples(PairingVariant variant) const {
    std::vector<QualifyingTriple> out;
    for (const WeylElement& v : embedding_.relative_weyl_set()) {
        auto bucket = qualifying_triples(variant, v);
        out.insert(out.end(), std::make_move_iterator(bucket.begin()), std::make_move_iterator(bucket.end()));
    }
    return out;
}

std::vector<QualifyingTriple> RelativeCalculus::qualifying_triples(PairingVariant variant,
                                                                   const WeylElement& v) const {
    const RootDatum& s = source_->datum();
    const RootDatum& t = target_->datum();
    const WeylElement w0 = s.longest();
    const WeylElement v_inv = t.inverse(v);
    std::vector<QualifyingTriple> out;
    for (const WeylElement& u : t.elements()) {
        if (u.length() > w0.length()) break;
        const CohomologyClass cls = pulled(v, u);
        for (const auto& [x, c] : cls.terms()) {
            if (x.length() != u.length()) continue;
            const WeylElement wtilde = variant == PairingVariant::Cone ? s.multiply(w0, x) : x;
            out.push_back({wtilde, t.multiply(u, v_inv), v, c});
        }
    }
    return out;
}

RayData RelativeCalculus::ray_data(const QVec& ray) const {
    const RootDatum& s = source_->datum();
    const RootDatum& t = target_->datum();
    const auto containing = embedding_.cubicles_containing(ray);
    if (containing.empty()) throw ConsistencyError("ray " + mcone::to_string(ray) + " lies in no cubicle");
    RayData d;
    d.ray = ray;
    d.v = embedding_.cubicles()[containing.front()].v;
    for (int i = 0; i < s.rank(); ++i)
        if (sgn(s.root_value(i, ray)) == 0) d.source_face.push_back(i);
    const QVec image = t.act_coweight(t.inverse(d.v), embedding_.push(ray));
    if (!t.is_dominant_coweight(image)) throw ConsistencyError("ray image is not dominant for its cubicle");
    d.target_face = t.face_of(image).vanishing;
    return d;
}

Rational RelativeCalculus::scalar_coefficient(const RayData& ray, const WeylElement& wtilde,
                                              const WeylElement& w) const {
    const RootDatum& s = source_->datum();
    const RootDatum& t = target_->datum();
    const WeylElement utilde = s.min_coset_rep(s.multiply(s.longest(), wtilde), ray.source_face, CosetSide::Right);
    const WeylElement u = t.min_coset_rep(t.multiply(w, ray.v), ray.target_face, CosetSide::Right);
    if (utilde.length() != u.length()) return 0;
    return pulled(ray.v, u).coefficient(utilde);
}

std::vector<ScalarPair> RelativeCalculus::scalar_pairs(const RayData& ray) const {
    const RootDatum& s = source_->datum();
    const RootDatum& t = target_->datum();
    const WeylElement w0 = s.longest();
    const WeylElement v_inv = t.inverse(ray.v);
    const auto source_reps = s.coset_reps(ray.source_face);
    std::vector<ScalarPair> out;
    for (const WeylElement& u : t.coset_reps(ray.target_face)) {
        if (u.length() > w0.length()) continue;
        const CohomologyClass cls = pulled(ray.v, u);
        if (cls.is_zero()) continue;
        for (const WeylElement& wtilde : source_reps) {
            const WeylElement utilde = s.min_coset_rep(s.multiply(w0, wtilde), ray.source_face, CosetSide::Right);
            if (utilde.length() != u.length()) continue;
            const Rational c = cls.coefficient(utilde);
            if (sgn(c) != 0) out.push_back({wtilde, t.multiply(u, v_inv), utilde, u, c});
        }
    }
    return out;
}

}  // namespace mcone
