#ifndef DIOREC_PIPELINE_HPP
#define DIOREC_PIPELINE_HPP

// The staged decision procedure for order-3 recurrences: derive the
// invariant and verify invariance, check admissibility, minimize the
// dehomogenized cubic over both avoidance regions, turn the minima into a
// search bound, enumerate below it, and classify generators. Results record
// exactly how far a given input gets, so front ends can report failures
// precisely.

#include <optional>
#include <vector>

#include "diorec/bound.hpp"
#include "diorec/minimize.hpp"
#include "diorec/multipoly.hpp"
#include "diorec/recurrence.hpp"
#include "diorec/solver.hpp"

namespace diorec {

enum class Stage {
    derived,        // invariant built, invariance verified; no decision run
    inadmissible,   // reducible characteristic polynomial or bad dominant root
    method_failed,  // some region minimum is not positive: no search bound
    bounded,        // search bound established, enumeration skipped on request
    solved,         // bound, enumeration, and generator classification done
};

struct PipelineResult {
    Recurrence rec;
    MultiPoly P;
    bool invariance_verified = false;
    Stage stage = Stage::derived;

    // order-3 decision data, filled as far as the run got. The reduction
    // fields are computed even for inadmissible inputs so that failure
    // reports can show how both halves of the method fare.
    std::optional<AdmissibilityReport> admissibility;
    std::optional<MultiPoly> plane_cubic;  // f(t, s) = P(t, s, 1)
    std::optional<BoundReport> bound;
    std::optional<SolutionSet> solutions;
    std::optional<GeneratorSet> generators;
};

// derive-only entry point: accepts every valid coefficient list (order >= 2)
PipelineResult derive_invariant(const std::vector<Int>& coeffs);

// admissibility + reduction + search bound, stopping before the enumeration;
// requires order 3 with a, b >= 1 (std::invalid_argument otherwise)
PipelineResult run_reduction(const std::vector<Int>& coeffs);

// the whole procedure; same preconditions as run_reduction
PipelineResult run_decision(const std::vector<Int>& coeffs);

}  // namespace diorec

#endif
