#ifndef DIOREC_RESULTANT_HPP
#define DIOREC_RESULTANT_HPP

// Exact resultants. Univariate resultants go through a Sylvester matrix
// and fraction-free (Bareiss) elimination; bivariate resultants eliminate
// one variable by sampling it at integers, taking integer resultants, and
// interpolating the coefficients back exactly.
//
// BiPoly represents an element of Z[u][v] as a vector indexed by the power
// of u whose entries are polynomials in v.

#include <vector>

#include "diorec/unipoly.hpp"

namespace diorec {

// determinant of an integer matrix, exact (Bareiss elimination)
Int det_bareiss(std::vector<std::vector<Int>> m);

// resultant of two integer polynomials; either argument zero gives 0
Int resultant_int(const UniPoly& a, const UniPoly& b);

struct BiPoly {
    // cu[i] is the coefficient of u^i, a polynomial in v
    std::vector<UniPoly> cu;

    static BiPoly from_u_poly(const UniPoly& p);  // p(u), constant in v
    void normalize();
    bool is_zero() const { return cu.empty(); }
    long deg_u() const { return static_cast<long>(cu.size()) - 1; }
    long deg_v() const;
    // specialize u := value, leaving a polynomial in v
    UniPoly eval_u(const Int& u0) const;
    // specialize v := value, leaving a polynomial in u
    UniPoly eval_v(const Int& v0) const;
};

// Res_u(a, b): eliminates u from a(u,v), b(u,v); the result is a polynomial
// in v. Computed by sampling v at integers where neither leading
// u-coefficient vanishes, then interpolating. Throws if both arguments
// would make the resultant undefined (zero polynomial input).
UniPoly resultant_elim_u(const BiPoly& a, const BiPoly& b);

// exact polynomial interpolation through (x[i], y[i]); throws if the
// interpolant is not integral
UniPoly interpolate_integer_poly(const std::vector<Int>& xs, const std::vector<Rat>& ys);

}  // namespace diorec

#endif
