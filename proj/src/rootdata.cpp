#include "mcone/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mcone/errors.hpp"
#include "mcone/linalg.hpp"

namespace mcone {

namespace {

constexpr std::size_t kMaxRoots = 4000;

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt pow2(int n) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return p;
}

std::vector<IVec> cartan_of(char type, int n) {
    std::vector<IVec> a(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n), 0));
    auto link = [&](int i, int j, std::int64_t aij, std::int64_t aji) {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            break;
        case 'B':  // alpha_n short
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 2, n - 1, -2, -1);
            break;
        case 'C':  // alpha_n long
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 2, n - 1, -1, -2);
            break;
        case 'D':
            for (int i = 0; i + 2 < n - 1; ++i) link(i, i + 1, -1, -1);
            link(n - 3, n - 2, -1, -1);
            link(n - 3, n - 1, -1, -1);
            break;
        case 'G':  // alpha_1 short, alpha_2 long
            link(0, 1, -1, -3);
            break;
        case 'F':  // alpha_1, alpha_2 long
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
            break;
        default:
            throw ConfigError(std::string("unsupported Cartan type '") + type + "'");
    }
    return a;
}

void check_supported(char type, int n, const std::string& token) {
    bool ok = false;
    switch (type) {
        case 'A': ok = n >= 1 && n <= 20; break;
        case 'B': ok = n >= 2 && n <= 4; break;
        case 'C': ok = n >= 2 && n <= 4; break;
        case 'D': ok = n == 4; break;
        case 'G': ok = n == 2; break;
        case 'F': ok = n == 4; break;
        default: ok = false;
    }
    if (!ok) throw ConfigError("unknown type string '" + token + "'");
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

int parse_positive(const std::string& digits, const std::string& token) {
    if (digits.empty() || digits.size() > 4 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ConfigError("unknown type string '" + token + "'");
    return std::stoi(digits);
}

}  // namespace

bool WeylElement::operator<(const WeylElement& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (int i : w) s += "s" + std::to_string(i + 1);
    return s;
}

struct RootDatum::Impl {
    int rank = 0;
    int central = 0;
    std::string label;
    std::vector<Component> components;
    std::size_t bound = kDefaultEnumerationBound;
    std::vector<IVec> cartan;
    std::vector<QVec> simple_roots;
    std::vector<Root> positive_roots;
    std::vector<IMat> reflect_weight;
    std::vector<IMat> reflect_coweight;
    IVec rho;
    QVec rho_vee;
    QMat gram;
    BigInt order;

    mutable std::once_flag enumerated;
    mutable std::vector<WeylElement> elements;
    mutable std::unordered_map<IVec, std::size_t, IVecHash> index;
};

namespace {

// Component classification by (rank, number of positive roots, bond data).
BigInt component_order(const std::vector<IVec>& cartan, const std::vector<int>& nodes, std::size_t nroots,
                       char* type_out) {
    const int n = static_cast<int>(nodes.size());
    int max_bond = 1;
    for (int i : nodes)
        for (int j : nodes)
            if (i != j) max_bond = std::max<int>(max_bond, static_cast<int>(-cartan[i][j]));
    const auto N = static_cast<long>(nroots);
    if (max_bond == 3) {
        *type_out = 'G';
        return 12;
    }
    if (max_bond == 2) {
        if (n == 4 && N == 24) {
            *type_out = 'F';
            return 1152;
        }
        *type_out = 'B';
        return pow2(n) * factorial(n);
    }
    if (N == static_cast<long>(n) * (n + 1) / 2) {
        *type_out = 'A';
        return factorial(n + 1);
    }
    if (N == static_cast<long>(n) * (n - 1)) {
        *type_out = 'D';
        return pow2(n - 1) * factorial(n);
    }
    *type_out = 'E';
    if (n == 6 && N == 36) return 51840;
    if (n == 7 && N == 63) return 2903040;
    if (n == 8 && N == 120) return 696729600;
    throw ConfigError("Cartan matrix component is not of finite type");
}

}  // namespace

RootDatum RootDatum::from_cartan(const std::vector<IVec>& cartan, int central_rank, std::string label,
                                 std::size_t enumeration_bound) {
    const int r = static_cast<int>(cartan.size());
    if (central_rank < 0) throw ConfigError("central rank must be nonnegative");
    if (r + central_rank == 0) throw ConfigError("root datum of dimension zero");
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(cartan[i].size()) != r) throw ConfigError("Cartan matrix is not square");
        if (cartan[i][i] != 2) throw ConfigError("Cartan matrix diagonal entry " + std::to_string(i + 1) + " is not 2");
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0)
                throw ConfigError("Cartan matrix off-diagonal entry (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ") is positive");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw ConfigError("Cartan matrix entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") and its transpose are not simultaneously zero");
        }
    }

    auto impl = std::make_shared<Impl>();
    impl->rank = r;
    impl->central = central_rank;
    impl->label = std::move(label);
    impl->bound = enumeration_bound;
    impl->cartan = cartan;
    const int n = r + central_rank;

    for (int i = 0; i < r; ++i) {
        QVec a = zeros(static_cast<std::size_t>(n));
        for (int j = 0; j < r; ++j) a[j] = Rational(static_cast<long>(cartan[i][j]));
        impl->simple_roots.push_back(std::move(a));
    }
    for (int i = 0; i < r; ++i) {
        IMat s = IMat::identity(static_cast<std::size_t>(n));
        for (int k = 0; k < r; ++k) s(k, i) -= cartan[i][k];
        impl->reflect_weight.push_back(s);
        impl->reflect_coweight.push_back(s.transpose());
    }
    impl->rho = IVec(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < r; ++i) impl->rho[i] = 1;

    // Positive roots by closing the simple roots under simple reflections.
    std::map<IVec, std::size_t> seen;
    std::queue<std::size_t> todo;
    for (int i = 0; i < r; ++i) {
        Root root;
        root.weight = impl->simple_roots[i];
        root.coroot = unit(static_cast<std::size_t>(n), static_cast<std::size_t>(i));
        root.simple_coeffs = IVec(static_cast<std::size_t>(r), 0);
        root.simple_coeffs[i] = 1;
        root.height = 1;
        root.reflection_word = {i};
        seen.emplace(root.simple_coeffs, impl->positive_roots.size());
        todo.push(impl->positive_roots.size());
        impl->positive_roots.push_back(std::move(root));
    }
    while (!todo.empty()) {
        const std::size_t idx = todo.front();
        todo.pop();
        for (int j = 0; j < r; ++j) {
            const Root& b = impl->positive_roots[idx];
            const Rational pairing = b.weight[j];
            if (sgn(pairing) == 0) continue;
            if (b.height == 1 && b.simple_coeffs[j] == 1) continue;  // s_j alpha_j = -alpha_j
            Root c;
            c.simple_coeffs = b.simple_coeffs;
            c.simple_coeffs[j] -= pairing.get_num().get_si();
            if (seen.count(c.simple_coeffs)) continue;
            if (std::any_of(c.simple_coeffs.begin(), c.simple_coeffs.end(), [](auto x) { return x < 0; }))
                throw ConfigError("Cartan matrix is not of finite type (negative coefficient in closure)");
            c.weight = impl->reflect_weight[j].apply(b.weight);
            c.coroot = impl->reflect_coweight[j].apply(b.coroot);
            c.height = 0;
            for (auto x : c.simple_coeffs) c.height += x;
            c.reflection_word.push_back(j);
            c.reflection_word.insert(c.reflection_word.end(), b.reflection_word.begin(), b.reflection_word.end());
            c.reflection_word.push_back(j);
            seen.emplace(c.simple_coeffs, impl->positive_roots.size());
            todo.push(impl->positive_roots.size());
            impl->positive_roots.push_back(std::move(c));
            if (impl->positive_roots.size() > kMaxRoots) throw ConfigError("Cartan matrix is not of finite type");
        }
    }
    std::stable_sort(impl->positive_roots.begin(), impl->positive_roots.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.simple_coeffs > b.simple_coeffs;
    });

    // Connected components, their types and the group order.
    std::vector<int> comp(static_cast<std::size_t>(r), -1);
    impl->order = 1;
    for (int start = 0; start < r; ++start) {
        if (comp[start] >= 0) continue;
        const int id = static_cast<int>(impl->components.size());
        std::vector<int> nodes;
        std::queue<int> q;
        q.push(start);
        comp[start] = id;
        while (!q.empty()) {
            const int i = q.front();
            q.pop();
            nodes.push_back(i);
            for (int j = 0; j < r; ++j)
                if (j != i && cartan[i][j] != 0 && comp[j] < 0) {
                    comp[j] = id;
                    q.push(j);
                }
        }
        std::sort(nodes.begin(), nodes.end());
        std::size_t nroots = 0;
        for (const auto& root : impl->positive_roots)
            if (std::any_of(nodes.begin(), nodes.end(), [&](int i) { return root.simple_coeffs[i] != 0; }))
                ++nroots;
        char type = '?';
        impl->order *= component_order(cartan, nodes, nroots, &type);
        impl->components.push_back(Component{type, static_cast<int>(nodes.size()), nodes.front()});
    }

    // Invariant form: lengths L_i with cartan[i][j] L_j = cartan[j][i] L_i.
    std::vector<Rational> len(static_cast<std::size_t>(r), Rational(0));
    for (int start = 0; start < r; ++start) {
        if (sgn(len[start]) != 0) continue;
        len[start] = 1;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            const int i = q.front();
            q.pop();
            for (int j = 0; j < r; ++j) {
                if (j == i || cartan[i][j] == 0 || sgn(len[j]) != 0) continue;
                len[j] = Rational(static_cast<long>(cartan[j][i])) * len[i] / Rational(static_cast<long>(cartan[i][j]));
                q.push(j);
            }
        }
    }
    impl->rho_vee = zeros(static_cast<std::size_t>(n));
    if (r > 0) {
        QMat B(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
        QMat A(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                B(i, j) = Rational(static_cast<long>(cartan[i][j])) * len[j] / 2;
                A(i, j) = Rational(static_cast<long>(cartan[i][j]));
            }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (B(i, j) != B(j, i)) throw ConfigError("Cartan matrix is not symmetrizable");
        const auto Ainv = mcone::inverse(A);
        if (!Ainv) throw ConfigError("Cartan matrix is singular");
        impl->gram = (*Ainv) * B * Ainv->transpose();
        for (int k = 0; k < r; ++k)
            for (int i = 0; i < r; ++i) impl->rho_vee[k] += (*Ainv)(k, i);
    }
    return RootDatum(std::move(impl));
}

RootDatum RootDatum::from_type(std::string_view spec_view, std::size_t enumeration_bound) {
    std::string spec = trim(spec_view);
    if (spec.empty()) throw ConfigError("empty type string");
    int central = 0;
    if (const auto plus = spec.find('+'); plus != std::string::npos) {
        const std::string suffix = trim(std::string_view(spec).substr(plus + 1));
        if (suffix.size() < 2 || (suffix[0] != 'u' && suffix[0] != 'U'))
            throw ConfigError("malformed central torus suffix in '" + spec + "'");
        central = parse_positive(suffix.substr(1), spec);
        spec = trim(std::string_view(spec).substr(0, plus));
    }
    std::vector<std::pair<char, int>> factors;
    std::stringstream ss(spec);
    std::string token;
    std::string label;
    while (std::getline(ss, token, 'x')) {
        token = trim(token);
        if (token.size() < 2) throw ConfigError("unknown type string '" + token + "'");
        const char type = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
        const int n = parse_positive(token.substr(1), token);
        if (type == 'T') {
            central += n;
            continue;
        }
        check_supported(type, n, token);
        factors.emplace_back(type, n);
        if (!label.empty()) label += "x";
        label += std::string(1, type) + std::to_string(n);
    }
    if (spec.back() == 'x') throw ConfigError("dangling product separator in '" + spec + "'");
    int r = 0;
    for (const auto& f : factors) r += f.second;
    std::vector<IVec> cartan(static_cast<std::size_t>(r), IVec(static_cast<std::size_t>(r), 0));
    int off = 0;
    for (const auto& [type, n] : factors) {
        const auto block = cartan_of(type, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cartan[off + i][off + j] = block[i][j];
        off += n;
    }
    if (label.empty()) label = "T" + std::to_string(central);
    else if (central > 0) label += "+u" + std::to_string(central);
    return from_cartan(cartan, central, label, enumeration_bound);
}

RootDatum RootDatum::product(const std::vector<RootDatum>& factors) {
    if (factors.empty()) throw ConfigError("empty product of root data");
    int r = 0, c = 0;
    std::string label;
    std::string center_label;
    for (const auto& f : factors) {
        r += f.rank();
        c += f.central_rank();
    }
    std::vector<IVec> cartan(static_cast<std::size_t>(r), IVec(static_cast<std::size_t>(r), 0));
    int off = 0;
    for (const auto& f : factors) {
        for (int i = 0; i < f.rank(); ++i)
            for (int j = 0; j < f.rank(); ++j) cartan[off + i][off + j] = f.cartan(i, j);
        off += f.rank();
        std::string base = f.label();
        if (const auto plus = base.find('+'); plus != std::string::npos) base = base.substr(0, plus);
        if (f.rank() > 0) label += (label.empty() ? "" : "x") + base;
    }
    if (label.empty()) label = "T" + std::to_string(c);
    else if (c > 0) label += "+u" + std::to_string(c);
    return from_cartan(cartan, c, label, factors.front().enumeration_bound());
}

int RootDatum::rank() const { return impl_->rank; }
int RootDatum::central_rank() const { return impl_->central; }
const std::string& RootDatum::label() const { return impl_->label; }
const std::vector<Component>& RootDatum::components() const { return impl_->components; }
std::size_t RootDatum::enumeration_bound() const { return impl_->bound; }
std::int64_t RootDatum::cartan(int i, int j) const { return impl_->cartan[i][j]; }
const QVec& RootDatum::simple_root(int i) const { return impl_->simple_roots[i]; }
QVec RootDatum::simple_coroot(int i) const { return unit(static_cast<std::size_t>(dim()), static_cast<std::size_t>(i)); }
const std::vector<Root>& RootDatum::positive_roots() const { return impl_->positive_roots; }
QVec RootDatum::fundamental_weight(int i) const { return unit(static_cast<std::size_t>(dim()), static_cast<std::size_t>(i)); }
const QMat& RootDatum::weight_gram() const { return impl_->gram; }
BigInt RootDatum::weyl_order() const { return impl_->order; }
bool RootDatum::is_enumerable() const { return impl_->order <= BigInt(static_cast<unsigned long>(impl_->bound)); }

std::string RootDatum::fingerprint() const {
    std::ostringstream out;
    out << impl_->label << "|r=" << impl_->rank << "|c=" << impl_->central << "|cartan=";
    for (const auto& row : impl_->cartan) {
        for (auto x : row) out << x << ',';
        out << ';';
    }
    return out.str();
}

QVec RootDatum::fundamental_coweight(int i) const {
    const int r = rank();
    QMat A(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) A(a, b) = Rational(static_cast<long>(cartan(a, b)));
    const auto x = mcone::solve(A, unit(static_cast<std::size_t>(r), static_cast<std::size_t>(i)));
    QVec v = zeros(static_cast<std::size_t>(dim()));
    for (int a = 0; a < r; ++a) v[a] = (*x)[a];
    return v;
}

QVec RootDatum::rho() const { return to_qvec(impl_->rho); }

Rational RootDatum::root_value(int i, const QVec& coweight) const {
    Rational s = 0;
    for (int k = 0; k < rank(); ++k)
        if (impl_->cartan[i][k] != 0) s += Rational(static_cast<long>(impl_->cartan[i][k])) * coweight[k];
    return s;
}

WeylElement RootDatum::make(IMat weight, IMat coweight) const {
    WeylElement w;
    IVec eta = weight.apply(impl_->rho);
    const int r = rank();
    for (;;) {
        int i = 0;
        while (i < r && eta[i] >= 0) ++i;
        if (i == r) break;
        w.word_.push_back(i);
        eta = impl_->reflect_weight[i].apply(eta);
    }
    if (eta != impl_->rho) throw ConsistencyError("matrix is not a Weyl group element of " + label());
    w.weight_ = std::move(weight);
    w.coweight_ = std::move(coweight);
    return w;
}

WeylElement RootDatum::identity() const {
    const auto n = static_cast<std::size_t>(dim());
    return make(IMat::identity(n), IMat::identity(n));
}

WeylElement RootDatum::simple_reflection(int i) const {
    if (i < 0 || i >= rank()) throw ConfigError("simple reflection index out of range");
    return make(impl_->reflect_weight[i], impl_->reflect_coweight[i]);
}

WeylElement RootDatum::from_word(std::span<const int> word) const {
    const auto n = static_cast<std::size_t>(dim());
    IMat m = IMat::identity(n), c = IMat::identity(n);
    for (int i : word) {
        if (i < 0 || i >= rank()) throw ConfigError("simple reflection index out of range");
        m = m * impl_->reflect_weight[i];
        c = c * impl_->reflect_coweight[i];
    }
    return make(std::move(m), std::move(c));
}

WeylElement RootDatum::multiply(const WeylElement& a, const WeylElement& b) const {
    return make(a.weight_ * b.weight_, a.coweight_ * b.coweight_);
}

WeylElement RootDatum::inverse(const WeylElement& w) const {
    return make(w.coweight_.transpose(), w.weight_.transpose());
}

WeylElement RootDatum::longest() const {
    QVec neg = negate(rho());
    return to_dominant_weight(neg).second;
}

WeylElement RootDatum::reflection(const Root& r) const { return from_word(r.reflection_word); }

QVec RootDatum::act_weight(const WeylElement& w, const QVec& weight) const { return w.weight_.apply(weight); }
QVec RootDatum::act_coweight(const WeylElement& w, const QVec& coweight) const { return w.coweight_.apply(coweight); }

bool RootDatum::is_dominant_weight(const QVec& weight) const {
    for (int i = 0; i < rank(); ++i)
        if (sgn(weight[i]) < 0) return false;
    return true;
}

bool RootDatum::is_dominant_coweight(const QVec& coweight) const {
    for (int i = 0; i < rank(); ++i)
        if (sgn(root_value(i, coweight)) < 0) return false;
    return true;
}

std::pair<QVec, WeylElement> RootDatum::to_dominant_weight(const QVec& weight) const {
    QVec x = weight;
    Word word;
    for (;;) {
        int i = 0;
        while (i < rank() && sgn(x[i]) >= 0) ++i;
        if (i == rank()) break;
        word.push_back(i);
        x = impl_->reflect_weight[i].apply(x);
    }
    return {x, from_word(word)};
}

std::pair<QVec, WeylElement> RootDatum::to_dominant_coweight(const QVec& coweight) const {
    QVec x = coweight;
    Word word;
    for (;;) {
        int i = 0;
        while (i < rank() && sgn(root_value(i, x)) >= 0) ++i;
        if (i == rank()) break;
        word.push_back(i);
        x = impl_->reflect_coweight[i].apply(x);
    }
    return {x, from_word(word)};
}

bool RootDatum::is_left_descent(const WeylElement& w, int i) const {
    // w^{-1} alpha_i < 0  iff  <w rho, alpha_i^vee> < 0
    const IVec eta = w.weight_.apply(impl_->rho);
    return eta[i] < 0;
}

bool RootDatum::is_right_descent(const WeylElement& w, int i) const {
    // w alpha_i < 0  iff  <w^{-1} rho, alpha_i^vee> < 0
    const IVec eta = w.coweight_.transpose().apply(impl_->rho);
    return eta[i] < 0;
}

WeylElement RootDatum::min_coset_rep(const WeylElement& w, const std::vector<int>& subset, CosetSide side) const {
    WeylElement cur = w;
    for (;;) {
        bool moved = false;
        for (int j : subset) {
            if (side == CosetSide::Right ? is_right_descent(cur, j) : is_left_descent(cur, j)) {
                cur = side == CosetSide::Right ? multiply(cur, simple_reflection(j))
                                               : multiply(simple_reflection(j), cur);
                moved = true;
                break;
            }
        }
        if (!moved) return cur;
    }
}

std::vector<WeylElement> RootDatum::coset_reps(const std::vector<int>& subset) const {
    std::vector<WeylElement> reps;
    for (const auto& w : elements()) {
        bool minimal = true;
        for (int j : subset)
            if (is_right_descent(w, j)) {
                minimal = false;
                break;
            }
        if (minimal) reps.push_back(w);
    }
    return reps;
}

std::vector<WeylElement> RootDatum::parabolic_subgroup(const std::vector<int>& subset) const {
    std::vector<WeylElement> out{identity()};
    std::set<IVec> seen{identity().matrix().data()};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int j : subset) {
            WeylElement next = multiply(out[k], simple_reflection(j));
            if (seen.insert(next.matrix().data()).second) {
                out.push_back(std::move(next));
                if (out.size() > impl_->bound)
                    throw ResourceError("parabolic subgroup of " + label() + " exceeds the enumeration bound");
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int RootDatum::inversion_count(const WeylElement& w) const {
    int count = 0;
    for (const auto& root : positive_roots()) {
        if (sgn(dot(act_weight(w, root.weight), impl_->rho_vee)) < 0) ++count;
    }
    return count;
}

const std::vector<WeylElement>& RootDatum::elements() const {
    if (!is_enumerable())
        throw ResourceError("Weyl group of " + label() + " has " + impl_->order.get_str() +
                            " elements, above the enumeration bound " + std::to_string(impl_->bound));
    std::call_once(impl_->enumerated, [this] {
        auto& els = impl_->elements;
        els.push_back(identity());
        impl_->index.emplace(els.back().matrix().data(), 0);
        // Breadth-first by length; each level is sorted canonically before the next is built.
        std::size_t level_begin = 0;
        while (level_begin < els.size()) {
            const std::size_t level_end = els.size();
            std::vector<WeylElement> next;
            std::unordered_map<IVec, std::size_t, IVecHash> fresh;
            for (std::size_t k = level_begin; k < level_end; ++k)
                for (int j = 0; j < rank(); ++j) {
                    if (is_right_descent(els[k], j)) continue;
                    WeylElement w = multiply(els[k], simple_reflection(j));
                    if (fresh.count(w.matrix().data())) continue;
                    fresh.emplace(w.matrix().data(), next.size());
                    next.push_back(std::move(w));
                }
            std::sort(next.begin(), next.end());
            for (auto& w : next) {
                impl_->index.emplace(w.matrix().data(), els.size());
                els.push_back(std::move(w));
            }
            level_begin = level_end;
        }
        if (BigInt(static_cast<unsigned long>(els.size())) != impl_->order)
            throw ConsistencyError("Weyl group enumeration of " + label() + " found " + std::to_string(els.size()) +
                                   " elements, expected " + impl_->order.get_str());
    });
    return impl_->elements;
}

std::size_t RootDatum::index_of(const WeylElement& w) const {
    elements();
    const auto it = impl_->index.find(w.matrix().data());
    if (it == impl_->index.end()) throw ConsistencyError("element not found in Weyl group of " + label());
    return it->second;
}

std::optional<std::vector<int>> RootDatum::permutation(const WeylElement& w) const {
    if (components().size() != 1 || components().front().type != 'A') return std::nullopt;
    const int n = rank() + 1;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        int x = j;
        for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
            if (x == *it) x = *it + 1;
            else if (x == *it + 1) x = *it;
        }
        perm[j] = x;
    }
    return perm;
}

std::string RootDatum::cycle_notation(const WeylElement& w) const {
    const auto perm = permutation(w);
    if (!perm) return word_to_string(w.word());
    std::string out;
    std::vector<bool> done(perm->size(), false);
    for (std::size_t start = 0; start < perm->size(); ++start) {
        if (done[start] || (*perm)[start] == static_cast<int>(start)) continue;
        out += "(";
        std::size_t x = start;
        bool first = true;
        while (!done[x]) {
            done[x] = true;
            if (!first) out += " ";
            out += std::to_string(x + 1);
            first = false;
            x = static_cast<std::size_t>((*perm)[x]);
        }
        out += ")";
    }
    return out.empty() ? "1" : out;
}

Face RootDatum::face_of(const QVec& dominant_coweight) const {
    if (!is_dominant_coweight(dominant_coweight)) throw ConsistencyError("face_of: coweight is not dominant");
    Face f;
    for (int i = 0; i < rank(); ++i)
        if (sgn(root_value(i, dominant_coweight)) == 0) f.vanishing.push_back(i);
    f.interior_point = dominant_coweight;
    return f;
}

}  // namespace mcone
