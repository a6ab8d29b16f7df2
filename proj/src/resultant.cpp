#include "diorec/resultant.hpp"

#include <stdexcept>

namespace diorec {

Int det_bareiss(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return Int(1);
    Int prev(1);
    int sgnflip = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return Int(0);
            std::swap(m[k], m[p]);
            sgnflip = -sgnflip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss update: division is exact
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sgnflip > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

Int resultant_int(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return Int(0);
    long m = a.degree(), n = b.degree();
    if (m == 0) return int_pow(a.coeff(0), static_cast<unsigned long>(n));
    if (n == 0) return int_pow(b.coeff(0), static_cast<unsigned long>(m));
    std::size_t sz = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Int>> s(sz, std::vector<Int>(sz, Int(0)));
    // n shifted rows of a's coefficients (descending), then m rows of b's
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
                a.coeff(static_cast<std::size_t>(m - j));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j)
            s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] =
                b.coeff(static_cast<std::size_t>(n - j));
    return det_bareiss(std::move(s));
}

BiPoly BiPoly::from_u_poly(const UniPoly& p) {
    BiPoly r;
    for (long i = 0; i <= p.degree(); ++i)
        r.cu.push_back(UniPoly::constant(p.coeff(static_cast<std::size_t>(i))));
    r.normalize();
    return r;
}

void BiPoly::normalize() {
    while (!cu.empty() && cu.back().is_zero()) cu.pop_back();
}

long BiPoly::deg_v() const {
    long d = -1;
    for (const auto& p : cu) d = std::max(d, p.degree());
    return d;
}

UniPoly BiPoly::eval_u(const Int& u0) const {
    UniPoly acc;
    for (auto it = cu.rbegin(); it != cu.rend(); ++it) acc = acc * u0 + *it;
    return acc;
}

UniPoly BiPoly::eval_v(const Int& v0) const {
    std::vector<Int> c;
    c.reserve(cu.size());
    for (const auto& p : cu) c.push_back(p.eval(v0));
    return UniPoly(std::move(c));
}

UniPoly interpolate_integer_poly(const std::vector<Int>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("interpolation needs matching nonempty samples");
    const std::size_t n = xs.size();
    // Newton's divided differences over Q
    std::vector<Rat> dd(ys);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - level]);
            if (i == level) break;
        }
    // expand Newton form into monomial coefficients
    std::vector<Rat> poly{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        // poly <- poly*(X - xs[i]) + dd[i]
        std::vector<Rat> nxt(poly.size() + 1, Rat(0));
        for (std::size_t j = 0; j < poly.size(); ++j) {
            nxt[j + 1] += poly[j];
            nxt[j] -= poly[j] * Rat(xs[i]);
        }
        nxt[0] += dd[i];
        poly = std::move(nxt);
    }
    std::vector<Int> out;
    out.reserve(poly.size());
    for (auto& q : poly) {
        q.canonicalize();
        if (q.get_den() != 1)
            throw std::logic_error("interpolant expected to be integral");
        out.push_back(q.get_num());
    }
    return UniPoly(std::move(out));
}

UniPoly resultant_elim_u(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("resultant of zero polynomial");
    long du_a = a.deg_u(), du_b = b.deg_u();
    if (du_a == 0 && du_b == 0) return UniPoly::constant(Int(1));
    // degree bound on the result in v
    long bound = du_a * std::max(b.deg_v(), 0L) + du_b * std::max(a.deg_v(), 0L);
    const UniPoly& lc_a = a.cu.back();
    const UniPoly& lc_b = b.cu.back();
    std::vector<Int> xs;
    std::vector<Rat> ys;
    Int v0(0);
    while (static_cast<long>(xs.size()) <= bound) {
        // skip sample points that change the Sylvester shape
        if (lc_a.eval(v0) != 0 && lc_b.eval(v0) != 0) {
            UniPoly av = a.eval_v(v0), bv = b.eval_v(v0);
            xs.push_back(v0);
            ys.emplace_back(resultant_int(av, bv));
        }
        // alternate 0, 1, -1, 2, -2, ...
        v0 = (v0 >= 0) ? Int(-(v0 + 1)) : Int(-v0);
    }
    return interpolate_integer_poly(xs, ys);
}

}  // namespace diorec
