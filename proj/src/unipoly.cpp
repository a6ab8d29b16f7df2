#include "diorec/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace diorec {

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Int& v) {
    UniPoly p;
    if (v != 0) p.c_.push_back(v);
    return p;
}

UniPoly UniPoly::of(std::initializer_list<long> coeffs) {
    std::vector<Int> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return UniPoly(std::move(v));
}

const Int& UniPoly::coeff(std::size_t i) const {
    static const Int zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const Int& UniPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Int& k) const {
    UniPoly r(*this);
    for (auto& x : r.c_) x *= k;
    r.normalize();
    return r;
}

Int UniPoly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat UniPoly::eval(const Rat& x) const {
    // Horner over the rationals; exact.
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return UniPoly(std::move(r));
}

Int UniPoly::content() const {
    Int g(0);
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return {};
    Int g = content();
    if (sign(leading()) < 0) g = -g;
    UniPoly r(*this);
    for (auto& x : r.c_) x /= g;
    return r;
}

UniPoly UniPoly::prem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
    UniPoly r = a;
    long db = b.degree();
    const Int& lb = b.leading();
    long steps = r.degree() - db + 1;
    if (steps <= 0) return r;
    while (!r.is_zero() && r.degree() >= db) {
        long shift = r.degree() - db;
        Int lr = r.leading();
        // r <- lb*r - lr * X^shift * b
        std::vector<Int> nr(r.c_.size(), Int(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) nr[i] = r.c_[i] * lb;
        for (std::size_t i = 0; i < b.c_.size(); ++i) nr[i + shift] -= lr * b.c_[i];
        r = UniPoly(std::move(nr));
        --steps;
    }
    // pad the multiplier so the total factor is exactly lb^(da-db+1)
    while (steps-- > 0) r = r * lb;
    return r;
}

UniPoly UniPoly::divide_exact(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<Int> rem = a.c_;
    std::vector<Int> q(a.degree() - b.degree() + 1, Int(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        Int& top = rem[i + b.degree()];
        if (top % b.leading() != 0) throw std::domain_error("inexact polynomial division");
        q[i] = top / b.leading();
        for (std::size_t j = 0; j < b.c_.size(); ++j) rem[i + j] -= q[i] * b.c_[j];
    }
    for (const auto& x : rem)
        if (x != 0) throw std::domain_error("inexact polynomial division");
    return UniPoly(std::move(q));
}

bool UniPoly::divides(const UniPoly& b, const UniPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    // pseudo-divide and test the remainder: b | a over Q iff prem(a,b) = 0
    return prem(a, b).is_zero();
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    a = a.primitive();
    b = b.primitive();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        UniPoly r = prem(a, b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

UniPoly UniPoly::square_free_part() const {
    if (is_zero()) throw std::domain_error("square-free part of zero polynomial");
    if (degree() == 0) return constant(Int(1));
    UniPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return primitive();
    // g is primitive and divides primitive(p) over Q, so the quotient is
    // integral by Gauss's lemma
    return divide_exact(primitive(), g).primitive();
}

UniPoly UniPoly::negate_arg() const {
    UniPoly r(*this);
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

UniPoly UniPoly::reverse() const {
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return UniPoly(std::move(r));
}

UniPoly UniPoly::compose_power(unsigned long k) const {
    if (k == 0) throw std::domain_error("compose_power requires k >= 1");
    if (is_zero()) return {};
    std::vector<Int> r(static_cast<std::size_t>(degree()) * k + 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::compose_linear(const Int& num, const Rat& off, const Int& den) const {
    if (den == 0) throw std::domain_error("compose_linear with zero denominator");
    // Horner with rational-coefficient intermediates, then clear denominators.
    std::vector<Rat> acc;  // polynomial over Q, constant first
    Rat a(num, den), b = off / Rat(den);
    a.canonicalize();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        // acc <- acc*(aX+b) + coeff
        std::vector<Rat> nxt(acc.size() + 1, Rat(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            nxt[i + 1] += acc[i] * a;
            nxt[i] += acc[i] * b;
        }
        if (nxt.empty()) nxt.push_back(Rat(0));
        nxt[0] += Rat(*it);
        acc = std::move(nxt);
    }
    Int lcm(1);
    for (const auto& q : acc) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> r;
    r.reserve(acc.size());
    for (const auto& q : acc) r.push_back(Int(q.get_num() * (lcm / q.get_den())));
    return UniPoly(std::move(r)).primitive();
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Int& a = coeff(static_cast<std::size_t>(i));
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (sign(a) < 0) os << "-";
            first = false;
        } else {
            os << (sign(a) < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// --- Sturm ----------------------------------------------------------------

SturmChain::SturmChain(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("Sturm chain of zero polynomial");
    seq_.push_back(p.primitive());
    if (p.degree() == 0) return;
    seq_.push_back(p.derivative().primitive());
    while (!seq_.back().is_zero() && seq_.back().degree() > 0) {
        const UniPoly& a = seq_[seq_.size() - 2];
        const UniPoly& b = seq_.back();
        UniPoly r = UniPoly::prem(a, b);
        // prem scales a by lc(b)^(delta+1); flip so the net scale on the
        // true remainder stays positive, which the Sturm sign rule needs
        long delta = a.degree() - b.degree();
        int beta_sign = (delta % 2 == 1) ? 1 : sign(b.leading());
        UniPoly next = (beta_sign > 0) ? -r : r;
        if (next.is_zero()) break;
        // dividing by (positive) content preserves signs everywhere
        Int cont = next.content();
        std::vector<Int> nc;
        nc.reserve(static_cast<std::size_t>(next.degree()) + 1);
        for (const auto& x : next.coeffs()) nc.push_back(Int(x / cont));
        seq_.push_back(UniPoly(std::move(nc)));
    }
}

long SturmChain::variations_at(const Rat& x) const {
    long v = 0;
    int prev = 0;
    for (const auto& p : seq_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

long SturmChain::variations_at_infinity(int dir) const {
    long v = 0;
    int prev = 0;
    for (const auto& p : seq_) {
        if (p.is_zero()) continue;
        int s = sign(p.leading());
        if (dir < 0 && p.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

long SturmChain::count(const Rat& a, const Rat& b) const {
    if (a >= b) return 0;
    return variations_at(a) - variations_at(b);
}

long SturmChain::count_all() const {
    return variations_at_infinity(-1) - variations_at_infinity(+1);
}

Rat cauchy_root_bound(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Rat(1);
    Int mx(0);
    for (long i = 0; i < p.degree(); ++i) {
        Int a = abs(p.coeff(static_cast<std::size_t>(i)));
        if (a > mx) mx = a;
    }
    Rat b = Rat(mx) / Rat(abs(p.leading()));
    return b + 1;
}

RatInterval interval_eval(const UniPoly& p, const RatInterval& x) {
    if (p.is_zero()) return RatInterval::of(Rat(0));
    RatInterval acc = RatInterval::of(Rat(p.leading()));
    for (long i = p.degree() - 1; i >= 0; --i) {
        acc = iv_mul(acc, x);
        acc = iv_add(acc, RatInterval::of(Rat(p.coeff(static_cast<std::size_t>(i)))));
    }
    return acc;
}

}  // namespace diorec
