#include "diorec/decimal.hpp"

#include <stdexcept>

namespace diorec {

namespace {

// 10^e as an exact rational; e may be negative
Rat pow10(long e) {
    Int p = int_pow(Int(10), static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rat(1, p) : Rat(p);
}

// the unique e with 10^e <= q < 10^(e+1), for q > 0
long dec_exponent(const Rat& q) {
    long nd = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 10));
    long dd = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 10));
    long e = nd - dd;  // sizeinbase overshoots by at most one digit each way
    while (q < pow10(e)) --e;
    while (q >= pow10(e + 1)) ++e;
    return e;
}

struct Digits {
    std::string ds;  // exactly `sig` digits
    long e;          // decimal exponent of the leading digit
};

// round q > 0 half away from zero to `sig` significant digits
Digits round_digits(const Rat& q, int sig) {
    long e = dec_exponent(q);
    Rat scaled = q * pow10(sig - 1 - e);
    Int k = rat_floor(scaled);
    if (Rat(scaled - Rat(k)) * 2 >= 1) k += 1;
    if (k == int_pow(Int(10), static_cast<unsigned long>(sig))) {
        k /= 10;  // 9.99... carried into a new leading digit
        ++e;
    }
    return {k.get_str(), e};
}

std::string format(const Digits& d, bool neg, int sig) {
    std::string ds = d.ds;
    while (ds.size() > 1 && ds.back() == '0') ds.pop_back();
    long e = d.e;
    std::string out;
    if (e < -4 || e >= sig) {
        out = ds.substr(0, 1);
        if (ds.size() > 1) out += "." + ds.substr(1);
        long ae = e < 0 ? -e : e;
        std::string es = std::to_string(ae);
        if (es.size() < 2) es.insert(0, "0");
        out += std::string("e") + (e < 0 ? "-" : "+") + es;
    } else if (e >= 0) {
        std::size_t ip = static_cast<std::size_t>(e) + 1;
        if (ds.size() <= ip)
            out = ds + std::string(ip - ds.size(), '0');
        else
            out = ds.substr(0, ip) + "." + ds.substr(ip);
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
    }
    return neg ? "-" + out : out;
}

}  // namespace

std::string dec_render(const Rat& q, int sig) {
    if (sig < 1) throw std::invalid_argument("dec_render needs at least one significant digit");
    Rat c = q;
    c.canonicalize();
    if (c == 0) return "0";
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    return format(round_digits(a, sig), neg, sig);
}

std::string dec_render(const AlgebraicNumber& x, int sig) {
    if (sig < 1) throw std::invalid_argument("dec_render needs at least one significant digit");
    if (auto q = x.as_rational()) return dec_render(*q, sig);
    // x is irrational, hence never exactly on a rounding boundary: once the
    // interval is narrow enough, both endpoints round to the same string
    AlgebraicNumber y = x;
    Rat eps(Int(1), int_pow(Int(10), static_cast<unsigned long>(sig) + 4));
    for (int attempt = 0; attempt < 64; ++attempt) {
        y = y.refined(eps);
        std::string lo = dec_render(y.lo(), sig);
        std::string hi = dec_render(y.hi(), sig);
        if (lo == hi) return lo;
        eps = Rat(eps / Rat(int_pow(Int(10), 8)));
    }
    throw std::runtime_error("decimal rendering did not converge");
}

}  // namespace diorec
