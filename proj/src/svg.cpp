#include "mcone/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "mcone/errors.hpp"
#include "mcone/linalg.hpp"

namespace mcone {

namespace {

struct Point {
    double x = 0;
    double y = 0;
};

// Orthonormal picture of the weight plane: pi_1 along the x-axis.
class Plane {
public:
    explicit Plane(const QMat& q) {
        if (q.rows() != 2 || q.cols() != 2) throw ConfigError("SVG output needs a two-dimensional source");
        const double a = q(0, 0).get_d();
        const double b = q(0, 1).get_d();
        const double c = q(1, 1).get_d();
        e1_ = {std::sqrt(a), 0};
        e2_ = {b / std::sqrt(a), std::sqrt(c - b * b / a)};
        const auto inv = inverse(q);
        if (!inv) throw ConsistencyError("singular invariant form");
        to_weight_ = *inv;
    }

    Point weight(const QVec& w) const {
        const double s = w[0].get_d();
        const double t = w[1].get_d();
        return {s * e1_.x + t * e2_.x, s * e1_.y + t * e2_.y};
    }
    // Coweights are drawn as the weights they represent under the form.
    Point coweight(const QVec& xi) const { return weight(to_weight_.apply(xi)); }

private:
    Point e1_;
    Point e2_;
    QMat to_weight_;
};

class Canvas {
public:
    Canvas(double extent, std::string title) : extent_(extent), title_(std::move(title)) {}

    void line(Point a, Point b, const std::string& style) { body_ << "<line " << xy(a, "1") << ' ' << xy(b, "2") << " style=\"" << style << "\"/>\n"; }
    void polygon(const std::vector<Point>& pts, const std::string& style) {
        body_ << "<polygon points=\"";
        for (const auto& p : pts) body_ << fmt(sx(p)) << ',' << fmt(sy(p)) << ' ';
        body_ << "\" style=\"" << style << "\"/>\n";
    }
    void dot(Point p) { body_ << "<circle cx=\"" << fmt(sx(p)) << "\" cy=\"" << fmt(sy(p)) << "\" r=\"3\"/>\n"; }
    void text(Point p, const std::string& s) {
        body_ << "<text x=\"" << fmt(sx(p)) << "\" y=\"" << fmt(sy(p)) << "\" font-size=\"12\">" << s << "</text>\n";
    }

    std::string str() const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
            << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n<title>" << title_ << "</title>\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

private:
    static constexpr double kSize = 480;
    double sx(Point p) const { return kSize / 2 + p.x / extent_ * (kSize / 2 - 20); }
    double sy(Point p) const { return kSize / 2 - p.y / extent_ * (kSize / 2 - 20); }
    static std::string fmt(double v) {
        std::ostringstream o;
        o << std::fixed << std::setprecision(2) << v;
        return o.str();
    }
    std::string xy(Point p, const char* suffix) const {
        return std::string("x") + suffix + "=\"" + fmt(sx(p)) + "\" y" + suffix + "=\"" + fmt(sy(p)) + "\"";
    }

    double extent_;
    std::string title_;
    std::ostringstream body_;
};

double norm(Point p) { return std::hypot(p.x, p.y); }

Point scaled(Point p, double s) { return {p.x * s, p.y * s}; }

// A rank-2 source uses its own form; a torus source borrows the target form through an invertible pullback.
QMat source_form(const Embedding& e) {
    const RootDatum& s = e.source();
    if (s.dim() == 2 && s.rank() == 2) return s.weight_gram();
    const QMat& m = e.pullback_matrix();
    const auto m_inv = m.rows() == m.cols() ? inverse(m) : std::nullopt;
    if (s.rank() != 0 || s.dim() != 2 || !m_inv || e.target().rank() != 2)
        throw ConfigError("SVG output needs a rank-2 source or a torus with invertible pullback into rank 2");
    return m_inv->transpose() * e.target().weight_gram() * *m_inv;
}

}  // namespace

std::string polygon_svg(const Embedding& e, const std::vector<QVec>& vertices, const std::string& title) {
    const RootDatum& source = e.source();
    const Plane plane(source_form(e));
    std::vector<Point> pts;
    for (const auto& v : vertices) pts.push_back(plane.weight(v));
    double extent = 1;
    for (const auto& p : pts) extent = std::max(extent, norm(p) * 1.15);

    Point centre;
    for (const auto& p : pts) centre = {centre.x + p.x / static_cast<double>(pts.size()), centre.y + p.y / static_cast<double>(pts.size())};
    std::sort(pts.begin(), pts.end(), [&](Point a, Point b) {
        return std::atan2(a.y - centre.y, a.x - centre.x) < std::atan2(b.y - centre.y, b.x - centre.x);
    });

    Canvas canvas(extent, title);
    for (int i = 0; i < source.rank(); ++i) {
        const Point wall = plane.weight(source.fundamental_weight(i));
        canvas.line({0, 0}, scaled(wall, extent / norm(wall)), "stroke:#888;stroke-dasharray:4 3");
    }
    if (pts.size() >= 3) canvas.polygon(pts, "fill:#9ab;stroke:#123;stroke-width:1.5");
    else if (pts.size() == 2) canvas.line(pts[0], pts[1], "stroke:#123;stroke-width:2");
    for (const auto& p : pts) canvas.dot(p);
    return canvas.str();
}

std::string cubicles_svg(const Embedding& e) {
    const RootDatum& s = e.source();
    if (s.dim() != 2 || s.rank() != 2) throw ConfigError("cubicle drawings need a rank-2 semisimple source");
    const Plane plane(s.weight_gram());
    Canvas canvas(1.2, "cubicles of " + e.description());
    for (const auto& ray : e.all_rays()) {
        const Point p = plane.coweight(ray);
        canvas.line({0, 0}, scaled(p, 1 / norm(p)), "stroke:#123;stroke-width:1.5");
    }
    for (const auto& c : e.cubicles()) {
        const Point p = plane.coweight(c.interior_point);
        const Point label = scaled(p, 0.7 / norm(p));
        canvas.text(label, word_to_string(c.v.word()));
    }
    return canvas.str();
}

}  // namespace mcone
