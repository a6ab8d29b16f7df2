#ifndef DIOREC_NUMBERS_HPP
#define DIOREC_NUMBERS_HPP

// Arbitrary-precision integer and rational scalars used throughout the
// library, plus the handful of small helpers the exact kernel needs.
// Rationals are kept canonical (gcd-reduced, positive denominator) by the
// underlying representation; nothing downstream may assume limited range.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diorec {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

// floor(n/d) for exact integers (GMP's fdiv), and floor of a rational.
inline Int floor_div(const Int& n, const Int& d) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// "num/den" rendering used by certificates; integers render without "/1".
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit a machine long");
    return x.get_si();
}

// Closed rational interval [lo, hi] for outward-rounding-free enclosure
// arithmetic (everything is exact, so "rounding" never enters).
struct RatInterval {
    Rat lo, hi;

    static RatInterval of(const Rat& q) { return {q, q}; }
};

inline RatInterval iv_add(const RatInterval& a, const RatInterval& b) {
    return {Rat(a.lo + b.lo), Rat(a.hi + b.hi)};
}

inline RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
    Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    Rat lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rat hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return {lo, hi};
}

}  // namespace diorec

#endif
