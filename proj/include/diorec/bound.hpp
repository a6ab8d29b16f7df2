#ifndef DIOREC_BOUND_HPP
#define DIOREC_BOUND_HPP

// Turns the exact per-region minima into a rigorous integer search bound:
// if every minimum m is positive, any monotone solution with z >= L,
// L = 1 + floor(max_r m_r^(-1/3)), reduces strictly, so enumeration below L
// is exhaustive. The floor is decided exactly by comparing k^3 * m with 1.

#include <vector>

#include "diorec/minimize.hpp"

namespace diorec {

struct BoundReport {
    std::vector<MinReport> per_region;
    // exhaustive-search limit; meaningful only when method_ok
    Int search_limit;
    bool method_ok = false;
};

// Combine the per-region minimization reports. method_ok iff every minimum
// is strictly positive; in that case search_limit = L as above, verified by
// the exact sandwich (L-1)^3 * m <= 1 < L^3 * m on the binding minimum m.
BoundReport search_bound(std::vector<MinReport> reports);

// The truncated asymptotic lower bound a^2 + b^2*a/12 + 3b/2 + b^4/72 as an
// exact rational; diagnostic only.
Rat asymptotic_limit(const Int& a, const Int& b);

}  // namespace diorec

#endif
