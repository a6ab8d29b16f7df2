#ifndef DIOREC_PROOF_HPP
#define DIOREC_PROOF_HPP

// Plain-text rendering of decision-procedure outcomes: a THEOREM / PROOF /
// Q.E.D. document when the procedure succeeds, and a precise failure
// narrative when it does not. Exact values are shown as rationals, as
// simplified quadratic radicals, or as "the root of <poly> in (lo, hi)",
// always alongside decimal approximations the text never relies on.

#include <string>
#include <vector>

#include "diorec/algebraic.hpp"
#include "diorec/pipeline.hpp"

namespace diorec {

// "[0, 0, 1]" / "{[0, 0, 1], [0, 1, 3]}" — the display style for solution
// windows in documents and command output
std::string bracket_tuple(const SolutionTuple& t);
std::string tuple_set(const std::vector<SolutionTuple>& v);

// exact human-readable value: "p/q" for rationals, "(p + q*sqrt(D))/r" with
// the square part of the discriminant extracted for quadratic algebraics,
// "the root of <poly> in (lo, hi)" beyond degree 2
std::string exact_value_text(const AlgebraicNumber& x);

// document for any reduction/decision stage; requires the order-3 decision
// data (run_reduction or run_decision output)
std::string render_proof(const PipelineResult& pr);

}  // namespace diorec

#endif
