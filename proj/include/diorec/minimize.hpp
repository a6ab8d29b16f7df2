#ifndef DIOREC_MINIMIZE_HPP
#define DIOREC_MINIMIZE_HPP

// Exact global minimization of a bivariate polynomial over a rational
// polygon. Candidates are the polygon vertices, the critical points of the
// restriction of f to each boundary segment, and the interior critical
// points obtained by resultant elimination of the gradient system; every
// evaluation, membership test, and comparison is exact.

#include "diorec/algebraic.hpp"
#include "diorec/region.hpp"

namespace diorec {

// Exact value of f at the algebraic point (t, s). f must be a polynomial
// over plane_vars(). Rational coordinates take a direct substitution path;
// a fully algebraic point goes through two stages of resultant elimination
// ending in a univariate polynomial that the value is isolated against.
AlgebraicNumber bivariate_value(const MultiPoly& f, const AlgebraicNumber& t,
                                const AlgebraicNumber& s);

struct MinReport {
    Region region;
    AlgebraicNumber minimum;
    AlgebraicNumber witness_t, witness_s;
    bool positive = false;
    // Set when the gradient components share a common factor, so the
    // critical set is a curve rather than isolated points. The interior
    // scan then falls back to a dense exact sweep along vertical lines and
    // downstream certificates must carry the flag.
    bool degenerate_critical_set = false;
};

// Global minimum of f over the (closed) region. Ties among equal-valued
// candidates go to the lexicographically smallest witness (t first, then
// s). Throws std::domain_error if the region is empty.
MinReport exact_min(const MultiPoly& f, const Region& region);

}  // namespace diorec

#endif
