#ifndef DIOREC_UNIPOLY_HPP
#define DIOREC_UNIPOLY_HPP

// Dense univariate polynomials with arbitrary-precision integer
// coefficients: ring arithmetic, pseudo-division, primitive-PRS gcd,
// square-free part, Sturm chains with exact root counting, and the argument
// transforms (shift/scale/reverse/compose-with-power) that the real
// algebraic number layer builds on.
//
// Representation: coefficients constant-term first; the zero polynomial is
// the empty vector. The leading coefficient of a nonzero polynomial is
// never zero (normalize() maintains this).

#include <utility>
#include <vector>

#include "diorec/numbers.hpp"

namespace diorec {

class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static UniPoly constant(const Int& v);
    // Convenience: p = c[0] + c[1] X + ... from a braced list.
    static UniPoly of(std::initializer_list<long> coeffs);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Int& k) const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const { return sign(eval(x)); }

    UniPoly derivative() const;

    // content (gcd of coefficients, always >= 0) and the primitive part
    // with positive leading coefficient
    Int content() const;
    UniPoly primitive() const;

    // Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
    // Requires b nonzero; returns r.
    static UniPoly prem(const UniPoly& a, const UniPoly& b);

    // Exact division: returns q with a = q*b, throwing if the division is
    // not exact over the integers.
    static UniPoly divide_exact(const UniPoly& a, const UniPoly& b);
    // True iff b divides a exactly over the rationals.
    static bool divides(const UniPoly& b, const UniPoly& a);

    // gcd via primitive pseudo-remainder sequence; result is primitive
    // with positive leading coefficient
    static UniPoly gcd(UniPoly a, UniPoly b);

    UniPoly square_free_part() const;

    // --- argument transforms (all exact; results are primitive unless noted)
    UniPoly negate_arg() const;                     // p(-X)
    UniPoly reverse() const;                        // X^deg * p(1/X)
    UniPoly compose_power(unsigned long k) const;   // p(X^k)
    // integer polynomial proportional (by a positive rational) to
    // p((num X + off_num/off_den)/den); covers shift and scale at once
    UniPoly compose_linear(const Int& num, const Rat& off, const Int& den) const;

    std::string to_string(const std::string& var = "X") const;

  private:
    void normalize();
    std::vector<Int> c_;
};

// Sturm chain of a (square-free) polynomial and exact root counting.
class SturmChain {
  public:
    explicit SturmChain(const UniPoly& squarefree);
    // number of distinct real roots in the half-open interval (a, b]
    long count(const Rat& a, const Rat& b) const;
    // number of distinct real roots on the whole line
    long count_all() const;

  private:
    long variations_at(const Rat& x) const;
    long variations_at_infinity(int dir) const;
    std::vector<UniPoly> seq_;
};

// Cauchy bound: every real root lies in (-B, B).
Rat cauchy_root_bound(const UniPoly& p);

// Enclosure of p over the box x: interval Horner.  Exact rational endpoints,
// so the result always contains {p(t) : t in x} (possibly with slack).
RatInterval interval_eval(const UniPoly& p, const RatInterval& x);

}  // namespace diorec

#endif
