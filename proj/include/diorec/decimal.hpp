#ifndef DIOREC_DECIMAL_HPP
#define DIOREC_DECIMAL_HPP

// Deterministic decimal rendering of exact values to a fixed number of
// significant digits. Every rounding decision is made in exact integer
// arithmetic; for algebraic numbers the isolating interval is refined until
// both endpoints round to the same string, so repeated runs always emit
// identical bytes.

#include <string>

#include "diorec/algebraic.hpp"
#include "diorec/numbers.hpp"

namespace diorec {

// q to `sig` significant digits, rounded half away from zero, trailing
// zeros stripped. Positional notation while the decimal exponent lies in
// [-4, sig); scientific d.ddde[+-]NN outside that window. sig >= 1.
std::string dec_render(const Rat& q, int sig);

// the same rendering for a real algebraic number
std::string dec_render(const AlgebraicNumber& x, int sig);

}  // namespace diorec

#endif
