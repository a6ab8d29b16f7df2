#include "diorec/minimize.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

#include "diorec/resultant.hpp"

namespace diorec {

namespace {

// indices into plane_vars() and into every exponent tuple
constexpr std::size_t S = 0, T = 1;

// hard cap on refinement loops; hitting it means a decision that should
// have resolved never did
constexpr int kRefineCap = 20000;

[[noreturn]] void refine_overrun(const char* where) {
    throw std::logic_error(std::string("refinement budget exceeded in ") + where);
}

// f as an element of Z[u][v] with u = the plane variable at index ui
BiPoly to_bipoly(const MultiPoly& f, std::size_t ui) {
    std::size_t vi = 1 - ui;
    std::vector<std::vector<Int>> rows;
    for (const auto& [exp, c] : f.terms()) {
        std::size_t pu = exp[ui], pv = exp[vi];
        if (rows.size() <= pu) rows.resize(pu + 1);
        if (rows[pu].size() <= pv) rows[pu].resize(pv + 1, Int(0));
        rows[pu][pv] += c;
    }
    BiPoly out;
    out.cu.reserve(rows.size());
    for (auto& r : rows) out.cu.emplace_back(std::move(r));
    out.normalize();
    return out;
}

// f with the plane variable at index fix frozen to q, as the pair (n, den)
// with the restriction equal to n(other)/den
std::pair<UniPoly, Int> specialize(const MultiPoly& f, std::size_t fix, const Rat& q) {
    std::size_t keep = 1 - fix;
    unsigned long dfix = 0;
    for (const auto& [exp, c] : f.terms()) dfix = std::max(dfix, exp[fix]);
    Int num(q.get_num()), den(q.get_den());
    std::vector<Int> coefs;
    for (const auto& [exp, c] : f.terms()) {
        std::size_t pk = exp[keep];
        if (coefs.size() <= pk) coefs.resize(pk + 1, Int(0));
        coefs[pk] += c * int_pow(num, exp[fix]) * int_pow(den, dfix - exp[fix]);
    }
    return {UniPoly(std::move(coefs)), int_pow(den, dfix)};
}

// Res_u(a, b) with the constant-in-u cases peeled off: if both inputs are
// constant in u the elimination is vacuous and we report the zero
// polynomial, which callers treat as a degenerate critical set.
UniPoly res_u(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    if (a.deg_u() == 0 && b.deg_u() == 0) return UniPoly();
    if (a.deg_u() == 0) {
        UniPoly r = UniPoly::of({1});
        for (long k = 0; k < b.deg_u(); ++k) r = r * a.cu[0];
        return r;
    }
    if (b.deg_u() == 0) {
        UniPoly r = UniPoly::of({1});
        for (long k = 0; k < a.deg_u(); ++k) r = r * b.cu[0];
        return r;
    }
    return resultant_elim_u(a, b);
}

// Nudge the window endpoints off the roots of r (outward only, so whatever
// value the window encloses stays strictly inside), then build the root if
// the window isolates exactly one.
std::optional<AlgebraicNumber> try_isolate(const UniPoly& r, const SturmChain& chain, Rat vlo,
                                           Rat vhi) {
    Rat step = Rat((vhi - vlo) / 2);
    if (!(step > 0)) step = Rat(1, 2);
    while (r.sign_at(vlo) == 0) {
        vlo -= step;
        step /= 2;
    }
    step = Rat((vhi - vlo) / 2);
    if (!(step > 0)) step = Rat(1, 2);
    while (r.sign_at(vhi) == 0) {
        vhi += step;
        step /= 2;
    }
    if (chain.count(vlo, vhi) != 1) return std::nullopt;
    return AlgebraicNumber::from_root(r, vlo, vhi);
}

// exact membership in the closed region (unit square plus linear cuts)
bool region_contains(const Region& reg, const AlgebraicNumber& t, const AlgebraicNumber& s) {
    if (t.compare(Rat(0)) == Order::less || t.compare(Rat(1)) == Order::greater) return false;
    if (s.compare(Rat(0)) == Order::less || s.compare(Rat(1)) == Order::greater) return false;
    for (const auto& c : reg.constraints) {
        if (c.form.total_degree() > 1)
            throw std::invalid_argument("region constraints must be linear");
        Rat ct(c.form.coeff({0, 1})), cs(c.form.coeff({1, 0})), c0(c.form.coeff({0, 0}));
        int sg = t.mul(ct).add(s.mul(cs)).add(c0).sgn();
        if (c.geq ? sg < 0 : sg > 0) return false;
    }
    return true;
}

struct Candidate {
    AlgebraicNumber value, t, s;
};

// keep the smaller value; on an exact tie keep the lexicographically
// smaller witness, so the outcome is independent of candidate order
void consider(std::optional<Candidate>& best, Candidate cand) {
    if (!best) {
        best = std::move(cand);
        return;
    }
    Order byval = cand.value.compare(best->value);
    if (byval == Order::greater) return;
    if (byval == Order::less) {
        best = std::move(cand);
        return;
    }
    Order byt = cand.t.compare(best->t);
    if (byt == Order::less || (byt == Order::equal && cand.s.compare(best->s) == Order::less))
        best = std::move(cand);
}

}  // namespace

AlgebraicNumber bivariate_value(const MultiPoly& f, const AlgebraicNumber& t,
                                const AlgebraicNumber& s) {
    if (f.variables() != plane_vars())
        throw std::invalid_argument("bivariate_value expects a polynomial in (s, t)");

    if (auto qt = t.as_rational()) {
        auto [n, den] = specialize(f, T, *qt);
        return alg_eval(n, den, s);
    }
    if (auto qs = s.as_rational()) {
        auto [n, den] = specialize(f, S, *qs);
        return alg_eval(n, den, t);
    }

    // both coordinates are irrational: eliminate s, then t
    BiPoly fs = to_bipoly(f, S);  // coefficients of s^i, each a poly in t
    long e = fs.deg_u();
    long dt = 0;
    for (const auto& c : fs.cu) dt = std::max(dt, c.degree());
    if (e <= 0) return alg_eval(fs.is_zero() ? UniPoly() : fs.cu[0], Int(1), t);
    if (dt <= 0) {
        std::vector<Int> cs;
        for (const auto& c : fs.cu) cs.push_back(c.coeff(0));
        return alg_eval(UniPoly(std::move(cs)), Int(1), s);
    }

    const UniPoly& ps = s.defining();
    const UniPoly& pt = t.defining();
    long m = ps.degree();
    const UniPoly& lcs = fs.cu[static_cast<std::size_t>(e)];

    // Stage 1: C(t, v) = Res_s(ps(s), v - f(s, t)), built by freezing t at
    // integers tau with lc_s f(tau) != 0 and interpolating each
    // v-coefficient back. C has v-degree exactly m = deg ps with the
    // constant leading coefficient lc(ps)^e, and C(t, f(s0, t)) = 0
    // whenever ps(s0) = 0.
    long want = m * dt + 1;
    std::vector<Int> taus;
    std::vector<UniPoly> cts;
    for (Int tau(0); static_cast<long>(taus.size()) < want;
         tau = (tau > 0) ? Int(-tau) : Int(1 - tau)) {
        if (lcs.eval(tau) == 0) continue;
        UniPoly ftau = fs.eval_v(tau);  // f(s, tau), degree e in s
        BiPoly b;
        b.cu.resize(static_cast<std::size_t>(e) + 1);
        b.cu[0] = UniPoly(std::vector<Int>{Int(-ftau.coeff(0)), Int(1)});
        for (std::size_t i = 1; i < b.cu.size(); ++i)
            b.cu[i] = UniPoly(std::vector<Int>{Int(-ftau.coeff(i))});
        cts.push_back(resultant_elim_u(BiPoly::from_u_poly(ps), b));
        taus.push_back(tau);
    }
    std::vector<UniPoly> cj;  // coefficient of v^j in C, as a poly in t
    for (long j = 0; j <= m; ++j) {
        std::vector<Rat> ys;
        ys.reserve(cts.size());
        for (const auto& ct : cts) ys.emplace_back(ct.coeff(static_cast<std::size_t>(j)));
        cj.push_back(interpolate_integer_poly(taus, ys));
    }
    long du = 0;
    for (const auto& c : cj) du = std::max(du, c.degree());
    BiPoly C;  // rebuilt with u = t
    for (long i = 0; i <= du; ++i) {
        std::vector<Int> vc(static_cast<std::size_t>(m) + 1, Int(0));
        for (long j = 0; j <= m; ++j) vc[static_cast<std::size_t>(j)] =
            cj[static_cast<std::size_t>(j)].coeff(static_cast<std::size_t>(i));
        C.cu.emplace_back(std::move(vc));
    }
    C.normalize();

    // Stage 2: eliminate t. The leading v-coefficient of C is a nonzero
    // constant, so the resultant is never the zero polynomial, and it
    // vanishes at f(t, s) because pt and C(., v0) share the root t.
    UniPoly r = (C.deg_u() <= 0) ? C.cu[0] : resultant_elim_u(BiPoly::from_u_poly(pt), C);
    r = r.square_free_part();
    SturmChain chain(r);

    // isolate the value inside ever-tighter interval images of f over the
    // box enclosing (t, s)
    AlgebraicNumber ta(t), sa(s);
    for (int i = 0;; ++i) {
        if (i > kRefineCap) refine_overrun("bivariate_value");
        RatInterval tbox{ta.lo(), ta.hi()}, sbox{sa.lo(), sa.hi()};
        RatInterval acc = RatInterval::of(Rat(0));
        for (long k = e; k >= 0; --k) {
            acc = iv_mul(acc, sbox);
            acc = iv_add(acc, interval_eval(fs.cu[static_cast<std::size_t>(k)], tbox));
        }
        if (auto got = try_isolate(r, chain, acc.lo, acc.hi)) return *got;
        ta = ta.refined(Rat((ta.hi() - ta.lo()) / 2));
        sa = sa.refined(Rat((sa.hi() - sa.lo()) / 2));
    }
}

MinReport exact_min(const MultiPoly& f, const Region& region) {
    if (f.variables() != plane_vars())
        throw std::invalid_argument("exact_min expects a polynomial in (s, t)");
    std::vector<PlanePoint> verts = region.vertices();
    if (verts.empty()) throw std::domain_error("region " + region.name + " is empty");

    std::optional<Candidate> best;

    // vertices: exact rational evaluation
    for (const auto& p : verts) {
        Rat val = f.eval(std::vector<Rat>{p.s, p.t});
        consider(best, Candidate{AlgebraicNumber::from_rat(val), AlgebraicNumber::from_rat(p.t),
                                 AlgebraicNumber::from_rat(p.s)});
    }

    // boundary segments: critical points of the one-variable restriction
    // f(t0 + u*dt, s0 + u*ds), u in (0, 1); endpoints are vertices and are
    // already covered
    for (const auto& edge : region.edges()) {
        Rat t0 = edge[0].t, s0 = edge[0].s;
        Rat dt = Rat(edge[1].t - t0), ds = Rat(edge[1].s - s0);
        // assemble g(u) = f(s(u), t(u)) with rational coefficients
        std::vector<Rat> g;
        for (const auto& [exp, c] : f.terms()) {
            std::vector<Rat> term{Rat(c)};
            for (unsigned long k = 0; k < exp[S]; ++k) {
                std::vector<Rat> next(term.size() + 1, Rat(0));
                for (std::size_t i = 0; i < term.size(); ++i) {
                    next[i] += term[i] * s0;
                    next[i + 1] += term[i] * ds;
                }
                term = std::move(next);
            }
            for (unsigned long k = 0; k < exp[T]; ++k) {
                std::vector<Rat> next(term.size() + 1, Rat(0));
                for (std::size_t i = 0; i < term.size(); ++i) {
                    next[i] += term[i] * t0;
                    next[i + 1] += term[i] * dt;
                }
                term = std::move(next);
            }
            if (g.size() < term.size()) g.resize(term.size(), Rat(0));
            for (std::size_t i = 0; i < term.size(); ++i) g[i] += term[i];
        }
        // clear denominators: g = n / den
        Int den(1);
        for (const auto& q : g) den = Int(lcm(den, Int(q.get_den())));
        std::vector<Int> nc;
        nc.reserve(g.size());
        for (const auto& q : g) nc.emplace_back(q.get_num() * (den / q.get_den()));
        UniPoly n(std::move(nc));
        UniPoly dn = n.derivative();
        if (dn.is_zero()) continue;  // constant along the segment
        for (const auto& u : isolate_real_roots(dn)) {
            if (u.compare(Rat(0)) != Order::greater || u.compare(Rat(1)) != Order::less) continue;
            consider(best, Candidate{alg_eval(n, den, u), u.mul(dt).add(t0), u.mul(ds).add(s0)});
        }
    }

    // interior: common roots of the gradient via resultant elimination
    MultiPoly fT = f.derivative(T), fS = f.derivative(S);
    UniPoly rt = res_u(to_bipoly(fT, S), to_bipoly(fS, S));  // s eliminated: roots in t
    UniPoly rs = res_u(to_bipoly(fT, T), to_bipoly(fS, T));  // t eliminated: roots in s
    bool degenerate = rt.is_zero() || rs.is_zero();

    if (!degenerate) {
        // Cross products of the projected roots may include points that are
        // not critical, but every candidate that passes the exact
        // membership test evaluates >= the true minimum, and both
        // coordinates of any interior minimizer are roots of the
        // respective resultants, so scanning the filtered cross product is
        // sound and complete.
        std::vector<AlgebraicNumber> tcands, scands;
        if (rt.degree() >= 1) tcands = isolate_real_roots(rt);
        if (rs.degree() >= 1) scands = isolate_real_roots(rs);
        for (const auto& tc : tcands) {
            if (tc.compare(Rat(0)) == Order::less || tc.compare(Rat(1)) == Order::greater)
                continue;
            for (const auto& sc : scands) {
                if (sc.compare(Rat(0)) == Order::less || sc.compare(Rat(1)) == Order::greater)
                    continue;
                if (!region_contains(region, tc, sc)) continue;
                consider(best, Candidate{bivariate_value(f, tc, sc), tc, sc});
            }
        }
    } else {
        // The critical set is a curve (or the gradient vanishes wholesale):
        // sweep vertical lines t = k/64 and collect the exact critical
        // points of each specialization. Boundary candidates above keep the
        // result anchored; the report is flagged so certificates can say
        // the interior scan was a sweep.
        for (int k = 0; k <= 64; ++k) {
            Rat tq(k, 64);
            tq.canonicalize();
            auto [nT, dT] = specialize(fT, T, tq);
            auto [nS, dS] = specialize(fS, T, tq);
            (void)dT;
            (void)dS;
            if (nT.is_zero() && nS.is_zero()) {
                // f is constant along this whole line; grid-sample it
                for (int j = 0; j <= 64; ++j) {
                    Rat sq(j, 64);
                    sq.canonicalize();
                    if (!region.contains(tq, sq)) continue;
                    Rat val = f.eval(std::vector<Rat>{sq, tq});
                    consider(best,
                             Candidate{AlgebraicNumber::from_rat(val),
                                       AlgebraicNumber::from_rat(tq), AlgebraicNumber::from_rat(sq)});
                }
                continue;
            }
            UniPoly common = nT.is_zero() ? nS : (nS.is_zero() ? nT : UniPoly::gcd(nT, nS));
            if (common.degree() < 1) continue;
            AlgebraicNumber ta = AlgebraicNumber::from_rat(tq);
            for (const auto& sc : isolate_real_roots(common)) {
                if (sc.compare(Rat(0)) == Order::less || sc.compare(Rat(1)) == Order::greater)
                    continue;
                if (!region_contains(region, ta, sc)) continue;
                consider(best, Candidate{bivariate_value(f, ta, sc), ta, sc});
            }
        }
    }

    bool positive = best->value.sgn() > 0;
    return MinReport{region, best->value, best->t, best->s, positive, degenerate};
}

}  // namespace diorec
