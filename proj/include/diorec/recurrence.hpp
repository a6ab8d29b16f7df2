#ifndef DIOREC_RECURRENCE_HPP
#define DIOREC_RECURRENCE_HPP

// Linear recurrences a(n) = c1*a(n-1) + ... + cd*a(n-d) with the unimodular
// normalization cd = (-1)^(d+1), their invariant Diophantine polynomials
// (window-matrix determinants), the forward/backward window shifts, and the
// order-3 admissibility check behind the converse theory.

#include <optional>
#include <string>
#include <vector>

#include "diorec/algebraic.hpp"
#include "diorec/multipoly.hpp"
#include "diorec/numbers.hpp"

namespace diorec {

// a solution window (a(n), a(n+1), ..., a(n+d-1)), oldest entry first
using SolutionTuple = std::vector<Int>;

struct Recurrence {
    long order = 0;                // d >= 2
    std::vector<Int> coeffs;       // (c1, ..., cd)

    // order-3 shorthand for coeffs (a, b, 1)
    const Int& a() const { return coeffs[0]; }
    const Int& b() const { return coeffs[1]; }
};

// checks length >= 2, cd = (-1)^(d+1), and that some earlier coefficient is
// nonzero; throws std::invalid_argument naming the violated constraint
Recurrence validate(const std::vector<Int>& coeffs);

// variable names used for the invariant: (x, y) for d=2, (x, y, z) for d=3,
// (x1, ..., xd) beyond
std::vector<std::string> window_vars(long order);

// d x d symbolic matrix whose row 0 is the free window (x1, ..., xd) and
// whose row k+1 is row k advanced one step by the recurrence
PolyMatrix window_matrix(const Recurrence& rec);

// the invariant polynomial P = sigma * det(window_matrix), sign fixed by
// P(0, ..., 0, 1) = 1; homogeneous of degree d
MultiPoly build_invariant(const Recurrence& rec);

// bindings for substitute() that realize one forward step of the window map
std::map<std::string, MultiPoly> shift_bindings(const Recurrence& rec);

SolutionTuple forward(const Recurrence& rec, const SolutionTuple& t);
SolutionTuple backward(const Recurrence& rec, const SolutionTuple& t);

struct AdmissibilityReport {
    UniPoly charpoly;                            // X^d - c1 X^(d-1) - ... - cd
    bool irreducible = false;
    std::optional<AlgebraicNumber> dominant_root;
    bool dominant_ok = false;                    // single largest real root > 1
    std::vector<std::string> reasons;            // diagnostics when not ok

    bool admissible() const { return irreducible && dominant_ok; }
};

// order-3 only, coeffs (a, b, 1) with a, b >= 1; throws on anything else.
// Irreducibility is the rational-root test (complete for cubics: candidate
// roots are +1/-1, and only -1 can occur, exactly when b = a + 2).
AdmissibilityReport is_admissible(const Recurrence& rec);

}  // namespace diorec

#endif
