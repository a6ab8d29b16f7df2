#include "diorec/recurrence.hpp"

#include <stdexcept>

namespace diorec {

Recurrence validate(const std::vector<Int>& coeffs) {
    if (coeffs.size() < 2) throw std::invalid_argument("recurrence needs order >= 2");
    long d = static_cast<long>(coeffs.size());
    Int required = (d % 2 == 0) ? Int(-1) : Int(1);
    if (coeffs.back() != required)
        throw std::invalid_argument("last coefficient must be " + required.get_str() +
                                    " for order " + std::to_string(d) +
                                    " (unimodular normalization)");
    bool nonzero = false;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) nonzero = nonzero || coeffs[i] != 0;
    if (!nonzero)
        throw std::invalid_argument("at least one of c1..c" + std::to_string(d - 1) +
                                    " must be nonzero");
    return Recurrence{d, coeffs};
}

std::vector<std::string> window_vars(long order) {
    if (order == 2) return {"x", "y"};
    if (order == 3) return {"x", "y", "z"};
    std::vector<std::string> v;
    for (long i = 1; i <= order; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

namespace {

// advance a symbolic window one step: drop the oldest entry, append
// sum_i c_i * w[d - i]
std::vector<MultiPoly> shift_window(const Recurrence& rec, const std::vector<MultiPoly>& w) {
    std::size_t d = w.size();
    std::vector<MultiPoly> next(w.begin() + 1, w.end());
    MultiPoly last(w.front().variables());
    for (std::size_t i = 0; i < d; ++i) last = last + w[d - 1 - i] * rec.coeffs[i];
    next.push_back(std::move(last));
    return next;
}

}  // namespace

PolyMatrix window_matrix(const Recurrence& rec) {
    std::vector<std::string> vars = window_vars(rec.order);
    std::vector<MultiPoly> row;
    for (const auto& v : vars) row.push_back(MultiPoly::var(vars, v));

    PolyMatrix m;
    m.rows = m.cols = static_cast<std::size_t>(rec.order);
    for (long k = 0; k < rec.order; ++k) {
        for (const auto& e : row) m.entries.push_back(e);
        if (k + 1 < rec.order) row = shift_window(rec, row);
    }
    return m;
}

MultiPoly build_invariant(const Recurrence& rec) {
    MultiPoly det = determinant(window_matrix(rec));
    std::vector<Int> seed(static_cast<std::size_t>(rec.order), Int(0));
    seed.back() = 1;
    Int at_seed = det.eval(seed);
    if (at_seed == 1) return det;
    if (at_seed == -1) return -det;
    // det B = 1 forces the window determinant to be unimodular at the seed
    throw std::logic_error("window determinant is not unimodular at (0,...,0,1)");
}

std::map<std::string, MultiPoly> shift_bindings(const Recurrence& rec) {
    std::vector<std::string> vars = window_vars(rec.order);
    std::vector<MultiPoly> row;
    for (const auto& v : vars) row.push_back(MultiPoly::var(vars, v));
    std::vector<MultiPoly> shifted = shift_window(rec, row);
    std::map<std::string, MultiPoly> sigma;
    for (std::size_t i = 0; i < vars.size(); ++i) sigma.emplace(vars[i], shifted[i]);
    return sigma;
}

SolutionTuple forward(const Recurrence& rec, const SolutionTuple& t) {
    if (t.size() != static_cast<std::size_t>(rec.order))
        throw std::invalid_argument("tuple length does not match recurrence order");
    SolutionTuple next(t.begin() + 1, t.end());
    Int last(0);
    for (std::size_t i = 0; i < t.size(); ++i) last += rec.coeffs[i] * t[t.size() - 1 - i];
    next.push_back(last);
    return next;
}

SolutionTuple backward(const Recurrence& rec, const SolutionTuple& t) {
    if (t.size() != static_cast<std::size_t>(rec.order))
        throw std::invalid_argument("tuple length does not match recurrence order");
    // find p with forward((p, t1, ..., t_{d-1})) = t; cd = +-1 keeps it integral
    Int acc = t.back();
    for (std::size_t i = 0; i + 1 < t.size(); ++i) acc -= rec.coeffs[i] * t[t.size() - 2 - i];
    SolutionTuple prev;
    prev.push_back(acc * rec.coeffs.back());  // divide by cd = +-1
    prev.insert(prev.end(), t.begin(), t.end() - 1);
    return prev;
}

AdmissibilityReport is_admissible(const Recurrence& rec) {
    if (rec.order != 3) throw std::invalid_argument("admissibility theory covers order 3 only");
    if (rec.a() < 1 || rec.b() < 1)
        throw std::invalid_argument("admissibility needs positive a, b");
    const Int& a = rec.a();
    const Int& b = rec.b();

    AdmissibilityReport rep;
    rep.charpoly = UniPoly(std::vector<Int>{Int(-1), -b, -a, Int(1)});

    // rational-root test: candidates are +-1; p(1) = -(a+b) < 0 always, and
    // p(-1) = b - a - 2, so the only reducible case is b = a + 2
    rep.irreducible = (b != a + 2);
    if (!rep.irreducible) {
        UniPoly quad(std::vector<Int>{Int(-1), -(a + 1), Int(1)});
        rep.reasons.push_back("characteristic polynomial " + rep.charpoly.to_string() +
                              " has rational root -1 and factors as (X + 1)*(" +
                              quad.to_string() + ")");
    }

    auto roots = isolate_real_roots(rep.charpoly);
    // p(1) < 0 and p is eventually positive, so a real root > 1 exists
    AlgebraicNumber alpha = roots.back();
    bool dominant = alpha.compare(Rat(1)) == Order::greater;
    if (!dominant) rep.reasons.push_back("largest real root is not greater than 1");

    if (roots.size() == 1) {
        // complex pair beta, conj(beta): the root product is 1, so
        // |beta|^2 = 1/alpha < 1 exactly when alpha > 1 — nothing more to check
    } else {
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            AlgebraicNumber mag = roots[i].sgn() < 0 ? -roots[i] : roots[i];
            if (alpha.compare(mag) != Order::greater) {
                dominant = false;
                rep.reasons.push_back(
                    "largest real root is not strictly dominant in modulus");
                break;
            }
        }
    }
    rep.dominant_root = alpha;
    rep.dominant_ok = dominant && rep.irreducible;
    return rep;
}

}  // namespace diorec
