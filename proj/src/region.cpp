#include "diorec/region.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace diorec {

const std::vector<std::string>& plane_vars() {
    static const std::vector<std::string> vars{"s", "t"};
    return vars;
}

MultiPoly dehomogenize(const MultiPoly& P) {
    if (P.variables().size() != 3)
        throw std::invalid_argument("dehomogenize expects a polynomial in three variables");
    if (P.is_zero() || !P.is_homogeneous(3))
        throw std::invalid_argument("dehomogenize expects a nonzero homogeneous cubic");
    MultiPoly t = MultiPoly::var(plane_vars(), "t");
    MultiPoly s = MultiPoly::var(plane_vars(), "s");
    MultiPoly one = MultiPoly::constant(plane_vars(), Int(1));
    const auto& v = P.variables();
    return P.substitute({{v[0], t}, {v[1], s}, {v[2], one}});
}

std::string Constraint::to_string() const {
    return form.to_string() + (geq ? " >= 0" : " <= 0");
}

namespace {

// ct*t + cs*s + c0 = 0
struct Line {
    Rat ct, cs, c0;
};

Line line_of(const MultiPoly& form) {
    if (form.total_degree() > 1) throw std::invalid_argument("constraint form is not linear");
    return Line{Rat(form.coeff({0, 1})), Rat(form.coeff({1, 0})), Rat(form.coeff({0, 0}))};
}

std::optional<PlanePoint> intersect(const Line& a, const Line& b) {
    Rat det = a.ct * b.cs - b.ct * a.cs;
    if (det == 0) return std::nullopt;
    // Cramer on ct*t + cs*s = -c0
    Rat t = (-a.c0 * b.cs - -b.c0 * a.cs) / det;
    Rat s = (a.ct * -b.c0 - b.ct * -a.c0) / det;
    return PlanePoint{t, s};
}

bool on_line(const Line& l, const PlanePoint& p) {
    return l.ct * p.t + l.cs * p.s + l.c0 == 0;
}

}  // namespace

bool Region::contains(const Rat& t, const Rat& s) const {
    if (t < 0 || t > 1 || s < 0 || s > 1) return false;
    for (const auto& c : constraints) {
        Rat v = c.form.eval(std::vector<Rat>{s, t});
        if (c.geq ? v < 0 : v > 0) return false;
    }
    return true;
}

namespace {

std::vector<Line> boundary_lines(const Region& r) {
    std::vector<Line> lines{
        {Rat(1), Rat(0), Rat(0)},   // t = 0
        {Rat(1), Rat(0), Rat(-1)},  // t = 1
        {Rat(0), Rat(1), Rat(0)},   // s = 0
        {Rat(0), Rat(1), Rat(-1)},  // s = 1
    };
    for (const auto& c : r.constraints) lines.push_back(line_of(c.form));
    return lines;
}

}  // namespace

std::vector<PlanePoint> Region::vertices() const {
    std::vector<Line> lines = boundary_lines(*this);
    std::vector<PlanePoint> out;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (auto p = intersect(lines[i], lines[j]))
                if (contains(p->t, p->s)) out.push_back(*p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::array<PlanePoint, 2>> Region::edges() const {
    std::vector<Line> lines = boundary_lines(*this);
    std::vector<PlanePoint> verts = vertices();
    std::vector<std::array<PlanePoint, 2>> out;
    for (const auto& l : lines) {
        std::vector<PlanePoint> on;
        for (const auto& v : verts)
            if (on_line(l, v)) on.push_back(v);
        if (on.size() < 2) continue;
        // the region is convex, so its slice along a boundary line is the
        // segment between the extreme vertices on that line
        PlanePoint a = *std::min_element(on.begin(), on.end());
        PlanePoint b = *std::max_element(on.begin(), on.end());
        if (!(a == b)) out.push_back({a, b});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x[0] < y[0] || (x[0] == y[0] && x[1] < y[1]);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Region avoidance_region(const Int& a, const Int& b, int which) {
    if (a < 1 || b < 1) throw std::invalid_argument("avoidance region needs a, b >= 1");
    MultiPoly form(plane_vars());
    form.add_term({0, 0}, Int(1));
    form.add_term({1, 0}, -a);
    Region r;
    if (which == 1) {
        form.add_term({0, 1}, -b);
        r.name = "region-1";
        r.constraints.push_back({form, false});  // 1 - a s - b t <= 0
    } else if (which == 2) {
        form.add_term({0, 1}, -(b + 1));
        r.name = "region-2";
        r.constraints.push_back({form, true});  // 1 - a s - (b+1) t >= 0
    } else {
        throw std::invalid_argument("avoidance region index must be 1 or 2");
    }
    return r;
}

}  // namespace diorec
