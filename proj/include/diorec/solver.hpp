#ifndef DIOREC_SOLVER_HPP
#define DIOREC_SOLVER_HPP

// Combinatorial side of the decision procedure: exhaustive enumeration of
// weakly increasing solutions below the search bound, generator
// classification by backward reduction, orbit walks in exact integers, the
// dominant-projection sign test, and the brute-force cube verification that
// cross-checks the whole story.

#include <string>
#include <vector>

#include "diorec/recurrence.hpp"

namespace diorec {

// "(0, 0, 1)" — used by error messages, proofs, and reports alike
std::string tuple_to_string(const SolutionTuple& t);

struct SolutionSet {
    Int limit;                             // enumeration bound L (exclusive)
    std::vector<SolutionTuple> solutions;  // lex sorted, no duplicates
};

struct GeneratorSet {
    std::vector<SolutionTuple> generators;  // lex-sorted subset of the set
};

// All tuples 0 <= x <= y <= z < limit with P(x, y, z) = 1, found by
// exhaustive exact evaluation; P must be a polynomial in three variables.
SolutionSet enumerate_below(const MultiPoly& P, const Int& limit);

// A solution is a generator iff its backward image fails to be a
// nonnegative weakly increasing tuple. Checks that every non-generator
// reduces to a generator through members of s (completeness of the limit);
// a chain that escapes s throws std::runtime_error.
GeneratorSet classify_generators(const Recurrence& rec, const SolutionSet& s);

// R^(-steps_back)(seed) ... R^(steps_forward)(seed), oldest first
std::vector<SolutionTuple> orbit(const Recurrence& rec, const SolutionTuple& seed,
                                 long steps_back, long steps_forward);

// Sign of (alpha^2 - a*alpha - b)*x + (alpha - a)*y + z, the projection of
// the window onto the dominant eigendirection; exactly 0 only for the zero
// tuple. Requires an admissible recurrence.
int dominant_sign(const Recurrence& rec, const SolutionTuple& t);

struct OrbitMatch {
    SolutionTuple solution;
    SolutionTuple generator;
    long step = 0;  // solution = R^step(generator), negatives go backward
};

struct VerifyReport {
    Int radius;
    std::vector<SolutionTuple> solutions;    // all |entries| <= radius, P = 1
    std::vector<OrbitMatch> matches;         // one per explained solution
    std::vector<SolutionTuple> unexplained;  // solutions on no walked orbit
    bool verified() const { return unexplained.empty(); }
};

// Scan the cube [-radius, radius]^3 for solutions of P = 1 and walk every
// generator's orbit in both directions until it durably leaves the cube;
// solutions not claimed by any orbit are reported, never thrown.
VerifyReport brute_force_verify(const Recurrence& rec, const Int& radius,
                                const GeneratorSet& gens);

}  // namespace diorec

#endif
