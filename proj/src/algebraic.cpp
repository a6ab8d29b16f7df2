#include "diorec/algebraic.hpp"

#include <functional>
#include <stdexcept>

#include "diorec/resultant.hpp"

namespace diorec {

namespace {

// hard cap on interval bisections inside exact decision loops; hitting it
// means a bug (a decision that should have resolved never did)
constexpr int kRefineCap = 20000;

[[noreturn]] void refine_overrun(const char* where) {
    throw std::logic_error(std::string("refinement budget exceeded in ") + where);
}

UniPoly canonical_defining(const UniPoly& p) {
    return p.square_free_part();  // primitive, positive leading coefficient
}

}  // namespace

AlgebraicNumber AlgebraicNumber::from_rat(const Rat& q) {
    AlgebraicNumber a;
    a.defining_ = UniPoly(std::vector<Int>{Int(-q.get_num()), Int(q.get_den())});
    a.lo_ = q - 1;
    a.hi_ = q + 1;
    a.approx_ = q.get_d();
    return a;
}

AlgebraicNumber AlgebraicNumber::from_root(const UniPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw std::invalid_argument("root of zero polynomial");
    AlgebraicNumber a;
    a.defining_ = canonical_defining(p);
    a.lo_ = lo;
    a.hi_ = hi;
    if (!(lo < hi) || a.defining_.sign_at(lo) == 0 || a.defining_.sign_at(hi) == 0 ||
        SturmChain(a.defining_).count(lo, hi) != 1)
        throw std::invalid_argument("interval does not isolate a single root");
    a.set_approx();
    return a;
}

std::optional<Rat> AlgebraicNumber::as_rational() const {
    if (defining_.degree() != 1) return std::nullopt;
    Rat q(-defining_.coeff(0), defining_.coeff(1));
    q.canonicalize();
    return q;
}

void AlgebraicNumber::bisect_once() {
    Rat mid = (lo_ + hi_) / 2;
    int sm = defining_.sign_at(mid);
    if (sm == 0) {
        // landed exactly on the root: it is rational; collapse to a linear
        // defining polynomial so endpoints are never roots again
        Rat w = (hi_ - lo_) / 4;
        defining_ = UniPoly(std::vector<Int>{Int(-mid.get_num()), Int(mid.get_den())});
        lo_ = mid - w;
        hi_ = mid + w;
        return;
    }
    if (sm == defining_.sign_at(lo_))
        lo_ = mid;
    else
        hi_ = mid;
}

AlgebraicNumber AlgebraicNumber::refined(const Rat& eps) const {
    if (eps <= 0) throw std::invalid_argument("refine needs eps > 0");
    AlgebraicNumber a(*this);
    for (int i = 0; a.hi_ - a.lo_ >= eps; ++i) {
        if (i > kRefineCap) refine_overrun("refined");
        a.bisect_once();
    }
    return a;
}

void AlgebraicNumber::set_approx() {
    static const Rat eps(Int(1), int_pow(Int(2), 64));
    Rat scale = abs_rat(lo_) + abs_rat(hi_);
    if (scale < 1) scale = 1;
    AlgebraicNumber t = refined(Rat(eps * scale));
    Rat mid = (t.lo_ + t.hi_) / 2;
    approx_ = mid.get_d();
}

int AlgebraicNumber::sgn() const {
    AlgebraicNumber a(*this);
    for (int i = 0;; ++i) {
        if (i > kRefineCap) refine_overrun("sgn");
        if (a.lo_ >= 0) return +1;  // the root lies strictly above lo
        if (a.hi_ <= 0) return -1;
        // interval straddles zero: the unique interior root is 0 iff X
        // divides the (square-free) defining polynomial
        if (a.defining_.coeff(0) == 0) return 0;
        a.bisect_once();
    }
}

Order AlgebraicNumber::compare(const Rat& q) const {
    if (q <= lo_) return Order::greater;
    if (q >= hi_) return Order::less;
    int sq = defining_.sign_at(q);
    if (sq == 0) return Order::equal;  // q is the unique root inside
    // the defining polynomial keeps a constant sign between the single
    // interior root and each endpoint, so one sign test settles the side
    return (sq == defining_.sign_at(lo_)) ? Order::greater : Order::less;
}

Order AlgebraicNumber::compare(const AlgebraicNumber& o) const {
    AlgebraicNumber a(*this), b(o);
    UniPoly g = UniPoly::gcd(a.defining_, b.defining_);
    std::optional<SturmChain> cg;
    if (g.degree() >= 1) cg.emplace(g);
    for (int i = 0;; ++i) {
        if (i > kRefineCap) refine_overrun("compare");
        if (a.hi_ <= b.lo_) return Order::less;
        if (b.hi_ <= a.lo_) return Order::greater;
        if (cg) {
            // equal values are a common root of g; if each interval holds a
            // root of g and their hull holds exactly one, the roots coincide
            if (cg->count(a.lo_, a.hi_) == 1 && cg->count(b.lo_, b.hi_) == 1 &&
                cg->count(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)) == 1)
                return Order::equal;
        }
        a.bisect_once();
        b.bisect_once();
    }
}

Int AlgebraicNumber::floor() const {
    AlgebraicNumber a = refined(Rat(1, 4));
    Int k = rat_floor(a.lo_);
    // the root lies in (lo, lo + 1/4); at most two integer candidates
    while (compare(Rat(k + 1)) != Order::less) ++k;
    return k;
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    AlgebraicNumber a;
    a.defining_ = defining_.negate_arg().primitive();
    a.lo_ = -hi_;
    a.hi_ = -lo_;
    a.approx_ = -approx_;
    return a;
}

AlgebraicNumber AlgebraicNumber::add(const Rat& q) const {
    if (auto r = as_rational()) return from_rat(*r + q);
    AlgebraicNumber a;
    a.defining_ = defining_.compose_linear(Int(1), -q, Int(1));  // p(X - q)
    a.lo_ = lo_ + q;
    a.hi_ = hi_ + q;
    a.approx_ = approx_ + q.get_d();
    return a;
}

AlgebraicNumber AlgebraicNumber::mul(const Rat& q) const {
    if (q == 0) return from_rat(Rat(0));
    if (auto r = as_rational()) return from_rat(*r * q);
    AlgebraicNumber a;
    // roots of p((den/num) X) are q * (roots of p)
    a.defining_ = defining_.compose_linear(Int(q.get_den()), Rat(0), Int(q.get_num()));
    if (q > 0) {
        a.lo_ = lo_ * q;
        a.hi_ = hi_ * q;
    } else {
        a.lo_ = hi_ * q;
        a.hi_ = lo_ * q;
    }
    a.approx_ = approx_ * q.get_d();
    return a;
}

namespace {

// q(v - u) as an element of Z[u][v]
BiPoly compose_v_minus_u(const UniPoly& q) {
    BiPoly acc;  // zero
    BiPoly pw;   // (v-u)^j, starting at j = 0
    pw.cu.push_back(UniPoly::constant(Int(1)));
    const UniPoly v_poly = UniPoly::of({0, 1});
    for (long j = 0; j <= q.degree(); ++j) {
        const Int& qj = q.coeff(static_cast<std::size_t>(j));
        if (qj != 0) {
            if (acc.cu.size() < pw.cu.size()) acc.cu.resize(pw.cu.size());
            for (std::size_t i = 0; i < pw.cu.size(); ++i)
                acc.cu[i] = acc.cu[i] + pw.cu[i] * qj;
        }
        if (j == q.degree()) break;
        // pw <- pw * (v - u)
        BiPoly nxt;
        nxt.cu.assign(pw.cu.size() + 1, UniPoly{});
        for (std::size_t i = 0; i < pw.cu.size(); ++i) {
            nxt.cu[i] = nxt.cu[i] + pw.cu[i] * v_poly;
            nxt.cu[i + 1] = nxt.cu[i + 1] - pw.cu[i];
        }
        nxt.normalize();
        pw = std::move(nxt);
    }
    acc.normalize();
    return acc;
}

// sum_j q_j v^j u^(m-j) with m = deg q: vanishes at (u, v) = (x, x*y) when
// q(y) = 0 and x != 0
BiPoly homogenized_product_form(const UniPoly& q) {
    long m = q.degree();
    BiPoly r;
    r.cu.assign(static_cast<std::size_t>(m) + 1, UniPoly{});
    for (long j = 0; j <= m; ++j) {
        std::vector<Int> vc(static_cast<std::size_t>(j) + 1, Int(0));
        vc.back() = q.coeff(static_cast<std::size_t>(j));
        r.cu[static_cast<std::size_t>(m - j)] = UniPoly(std::move(vc));
    }
    r.normalize();
    return r;
}

}  // namespace

AlgebraicNumber AlgebraicNumber::add(const AlgebraicNumber& o) const {
    if (auto r = o.as_rational()) return add(*r);
    if (auto r = as_rational()) return o.add(*r);
    UniPoly def = canonical_defining(
        resultant_elim_u(BiPoly::from_u_poly(defining_), compose_v_minus_u(o.defining_)));
    SturmChain chain(def);
    AlgebraicNumber a(*this), b(o);
    for (int i = 0;; ++i) {
        if (i > kRefineCap) refine_overrun("add");
        Rat lo = a.lo_ + b.lo_, hi = a.hi_ + b.hi_;
        if (def.sign_at(lo) != 0 && def.sign_at(hi) != 0 && chain.count(lo, hi) == 1)
            return from_root(def, lo, hi);
        a.bisect_once();
        b.bisect_once();
    }
}

AlgebraicNumber AlgebraicNumber::mul(const AlgebraicNumber& o) const {
    if (auto r = o.as_rational()) return mul(*r);
    if (auto r = as_rational()) return o.mul(*r);
    if (sgn() == 0 || o.sgn() == 0) return from_rat(Rat(0));
    UniPoly def = canonical_defining(
        resultant_elim_u(BiPoly::from_u_poly(defining_), homogenized_product_form(o.defining_)));
    SturmChain chain(def);
    AlgebraicNumber a(*this), b(o);
    for (int i = 0;; ++i) {
        if (i > kRefineCap) refine_overrun("mul");
        Rat c1 = a.lo_ * b.lo_, c2 = a.lo_ * b.hi_, c3 = a.hi_ * b.lo_, c4 = a.hi_ * b.hi_;
        Rat lo = std::min(std::min(c1, c2), std::min(c3, c4));
        Rat hi = std::max(std::max(c1, c2), std::max(c3, c4));
        if (def.sign_at(lo) != 0 && def.sign_at(hi) != 0 && chain.count(lo, hi) == 1)
            return from_root(def, lo, hi);
        a.bisect_once();
        b.bisect_once();
    }
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (auto r = as_rational()) {
        if (*r == 0) throw std::domain_error("inverse of zero");
        return from_rat(Rat(1) / *r);
    }
    if (sgn() == 0) throw std::domain_error("inverse of zero");
    AlgebraicNumber a(*this);
    for (int i = 0; a.lo_ <= 0 && a.hi_ >= 0; ++i) {
        if (i > kRefineCap) refine_overrun("inverse");
        a.bisect_once();
    }
    // reciprocals of a zero-free interval; the reversed polynomial has
    // exactly the reciprocal roots there
    Rat lo = Rat(1) / a.hi_, hi = Rat(1) / a.lo_;
    if (lo > hi) std::swap(lo, hi);
    return from_root(a.defining_.reverse(), lo, hi);
}

AlgebraicNumber AlgebraicNumber::pow(unsigned long k) const {
    if (k == 0) return from_rat(Rat(1));
    if (auto r = as_rational()) return from_rat(rat_pow(*r, k));
    if (k == 1) return *this;
    if (sgn() == 0) return from_rat(Rat(0));
    // Res_u(p(u), v - u^k) vanishes exactly at v = root^k
    BiPoly vk;
    vk.cu.assign(static_cast<std::size_t>(k) + 1, UniPoly{});
    vk.cu[0] = UniPoly::of({0, 1});
    vk.cu[static_cast<std::size_t>(k)] = UniPoly::constant(Int(-1));
    UniPoly def = canonical_defining(resultant_elim_u(BiPoly::from_u_poly(defining_), vk));
    SturmChain chain(def);
    AlgebraicNumber a(*this);
    for (int i = 0; a.lo_ <= 0 && a.hi_ >= 0; ++i) {
        if (i > kRefineCap) refine_overrun("pow");
        a.bisect_once();  // make the power map monotone on the interval
    }
    for (int i = 0;; ++i) {
        if (i > kRefineCap) refine_overrun("pow");
        Rat c1 = rat_pow(a.lo_, k), c2 = rat_pow(a.hi_, k);
        Rat lo = std::min(c1, c2), hi = std::max(c1, c2);
        if (def.sign_at(lo) != 0 && def.sign_at(hi) != 0 && chain.count(lo, hi) == 1)
            return from_root(def, lo, hi);
        a.bisect_once();
    }
}

AlgebraicNumber AlgebraicNumber::nth_root(unsigned long k) const {
    if (k == 0) throw std::domain_error("0th root");
    if (k == 1) return *this;
    int s = sgn();
    if (s == 0) return from_rat(Rat(0));
    if (s < 0) {
        if (k % 2 == 0) throw std::domain_error("even root of a negative value");
        return -((-*this).nth_root(k));
    }
    // positive operand: bisect candidate root intervals, deciding sides by
    // exact comparison of the k-th power against the operand
    UniPoly def = canonical_defining(defining_.compose_power(k));
    SturmChain chain(def);
    Rat a(0), b = std::max(Rat(1), hi_);
    for (int i = 0;; ++i) {
        if (i > kRefineCap) refine_overrun("nth_root");
        if (a > 0 && def.sign_at(a) != 0 && def.sign_at(b) != 0 && chain.count(a, b) == 1 &&
            compare(rat_pow(a, k)) == Order::greater && compare(rat_pow(b, k)) == Order::less)
            return from_root(def, a, b);
        Rat m = (a + b) / 2;
        Order c = compare(rat_pow(m, k));
        if (c == Order::equal) return from_rat(m);  // the root is rational
        if (c == Order::less)
            b = m;
        else
            a = m;
    }
}

std::vector<AlgebraicNumber> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots(0)");
    UniPoly sf = p.square_free_part();
    std::vector<AlgebraicNumber> out;
    if (sf.degree() < 1) return out;
    SturmChain chain(sf);
    Rat bound = cauchy_root_bound(sf);

    // recursive bisection, left half first so output comes out increasing;
    // both endpoints are always non-roots and cnt counts roots inside
    std::function<void(const Rat&, const Rat&, long)> go = [&](const Rat& lo, const Rat& hi,
                                                               long cnt) {
        if (cnt <= 0) return;
        if (cnt == 1) {
            out.push_back(AlgebraicNumber::from_root(sf, lo, hi));
            return;
        }
        Rat mid = (lo + hi) / 2;
        if (sf.sign_at(mid) == 0) {
            // rational root exactly at the midpoint: carve out a hole small
            // enough to exclude every other root
            Rat w = (hi - lo) / 4;
            while (chain.count(mid - w, mid + w) != 1 || sf.sign_at(mid - w) == 0 ||
                   sf.sign_at(mid + w) == 0)
                w /= 2;
            UniPoly lin(std::vector<Int>{Int(-mid.get_num()), Int(mid.get_den())});
            long left = chain.count(lo, mid - w);
            go(lo, mid - w, left);
            out.push_back(AlgebraicNumber::from_root(lin, mid - w, mid + w));
            go(mid + w, hi, cnt - 1 - left);
            return;
        }
        long left = chain.count(lo, mid);
        go(lo, mid, left);
        go(mid, hi, cnt - left);
    };
    go(-bound, bound, chain.count(-bound, bound));
    return out;
}

AlgebraicNumber alg_eval(const UniPoly& num, const Int& den, const AlgebraicNumber& x) {
    if (sign(den) == 0) throw std::invalid_argument("alg_eval: zero denominator");
    if (auto q = x.as_rational()) {
        Rat v = Rat(num.eval(*q) / Rat(den));
        v.canonicalize();
        return AlgebraicNumber::from_rat(v);
    }
    if (num.degree() <= 0) {
        Rat v(num.is_zero() ? Int(0) : num.coeff(0), den);
        v.canonicalize();
        return AlgebraicNumber::from_rat(v);
    }

    // R(v) = Res_u(p_x(u), den*v - num(u)) = lc(p_x)^deg(num) * prod over the
    // roots s of p_x of (den*v - num(s)): degree deg(p_x) in v with a nonzero
    // constant leading coefficient, so R is never the zero polynomial, and it
    // vanishes at num(x)/den.
    const UniPoly& px = x.defining();
    BiPoly lhs = BiPoly::from_u_poly(px);
    BiPoly rhs;
    rhs.cu.resize(static_cast<std::size_t>(num.degree()) + 1);
    rhs.cu[0] = UniPoly(std::vector<Int>{Int(-num.coeff(0)), den});
    for (std::size_t i = 1; i < rhs.cu.size(); ++i)
        rhs.cu[i] = UniPoly(std::vector<Int>{Int(-num.coeff(i))});
    UniPoly r = resultant_elim_u(lhs, rhs).square_free_part();
    SturmChain chain(r);

    // shrink the interval image of num/den around the value until it captures
    // exactly one root of R; endpoint nudges only ever move outward, so the
    // value stays strictly inside
    AlgebraicNumber xa(x);
    Rat dq(den);
    for (int i = 0;; ++i) {
        if (i > kRefineCap) refine_overrun("alg_eval");
        RatInterval img = interval_eval(num, RatInterval{xa.lo(), xa.hi()});
        Rat vlo = Rat(img.lo / dq), vhi = Rat(img.hi / dq);
        if (dq < 0) std::swap(vlo, vhi);
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
        if (chain.count(vlo, vhi) == 1) return AlgebraicNumber::from_root(r, vlo, vhi);
        xa = xa.refined(Rat((xa.hi() - xa.lo()) / 2));
    }
}

}  // namespace diorec
