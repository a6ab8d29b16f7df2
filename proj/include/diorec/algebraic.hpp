#ifndef DIOREC_ALGEBRAIC_HPP
#define DIOREC_ALGEBRAIC_HPP

// Real algebraic numbers: a square-free integer defining polynomial plus an
// isolating rational interval holding exactly one of its real roots. Every
// decision (comparison, sign, floor) is made exactly by Sturm counting and
// interval refinement; the stored double is advisory only and never feeds a
// decision.
//
// Rational values are represented with a linear defining polynomial, so the
// sign-change invariant p(lo)*p(hi) < 0 holds uniformly: interval endpoints
// are never roots.

#include <optional>
#include <vector>

#include "diorec/unipoly.hpp"

namespace diorec {

enum class Order { less = -1, equal = 0, greater = 1 };

class AlgebraicNumber {
  public:
    // Exact rational value (linear defining polynomial den*X - num).
    static AlgebraicNumber from_rat(const Rat& q);
    // A root of p known to be the only root of square_free_part(p) strictly
    // inside (lo, hi), with p(lo), p(hi) != 0. Prefer isolate_real_roots.
    static AlgebraicNumber from_root(const UniPoly& p, const Rat& lo, const Rat& hi);

    const UniPoly& defining() const { return defining_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    double approx() const { return approx_; }

    // Exact rational value when the defining polynomial is linear.
    std::optional<Rat> as_rational() const;

    // Shrink the isolating interval below eps (same root). Pure: returns a
    // refined copy; *this is untouched.
    AlgebraicNumber refined(const Rat& eps) const;

    int sgn() const;                       // exact sign of the value
    Order compare(const Rat& q) const;     // exact order vs a rational
    Order compare(const AlgebraicNumber& o) const;
    bool is_value(const Rat& q) const { return compare(q) == Order::equal; }

    // floor of the value as an exact integer
    Int floor() const;

    // --- exact arithmetic (resultant-based defining polynomials) ----------
    AlgebraicNumber operator-() const;
    AlgebraicNumber add(const Rat& q) const;
    AlgebraicNumber mul(const Rat& q) const;   // q may be zero
    AlgebraicNumber add(const AlgebraicNumber& o) const;
    AlgebraicNumber mul(const AlgebraicNumber& o) const;
    AlgebraicNumber inverse() const;           // throws on zero
    AlgebraicNumber pow(unsigned long k) const;
    // real k-th root; k even requires a nonnegative operand
    AlgebraicNumber nth_root(unsigned long k) const;

  private:
    AlgebraicNumber() = default;
    void set_approx();
    void bisect_once();

    UniPoly defining_;  // square-free, primitive, positive leading coefficient
    Rat lo_, hi_;       // defining_(lo)*defining_(hi) < 0; one root inside
    double approx_ = 0.0;
};

// All distinct real roots of p, in increasing order, with pairwise disjoint
// isolating intervals. Throws on the zero polynomial.
std::vector<AlgebraicNumber> isolate_real_roots(const UniPoly& p);

// num(x)/den for an algebraic x, computed exactly: the result is a root of
// Res_u(p_x(u), den*v - num(u)), pinned down by interval refinement of x.
AlgebraicNumber alg_eval(const UniPoly& num, const Int& den, const AlgebraicNumber& x);

}  // namespace diorec

#endif
