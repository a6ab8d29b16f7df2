#include "diorec/pipeline.hpp"

#include <stdexcept>

#include "diorec/region.hpp"

namespace diorec {

namespace {

bool invariance_holds(const Recurrence& rec, const MultiPoly& P) {
    return P.substitute(shift_bindings(rec)) == P;
}

}  // namespace

PipelineResult derive_invariant(const std::vector<Int>& coeffs) {
    PipelineResult pr;
    pr.rec = validate(coeffs);
    pr.P = build_invariant(pr.rec);
    pr.invariance_verified = invariance_holds(pr.rec, pr.P);
    pr.stage = Stage::derived;
    return pr;
}

PipelineResult run_reduction(const std::vector<Int>& coeffs) {
    PipelineResult pr = derive_invariant(coeffs);
    if (pr.rec.order != 3)
        throw std::invalid_argument("the decision procedure covers order-3 recurrences (a, b, 1)");
    pr.admissibility = is_admissible(pr.rec);  // rejects a, b < 1
    pr.plane_cubic = dehomogenize(pr.P);
    std::vector<MinReport> mins;
    mins.push_back(exact_min(*pr.plane_cubic, avoidance_region(pr.rec.a(), pr.rec.b(), 1)));
    mins.push_back(exact_min(*pr.plane_cubic, avoidance_region(pr.rec.a(), pr.rec.b(), 2)));
    pr.bound = search_bound(std::move(mins));
    if (!pr.admissibility->admissible())
        pr.stage = Stage::inadmissible;
    else if (!pr.bound->method_ok)
        pr.stage = Stage::method_failed;
    else
        pr.stage = Stage::bounded;
    return pr;
}

PipelineResult run_decision(const std::vector<Int>& coeffs) {
    PipelineResult pr = run_reduction(coeffs);
    if (pr.stage != Stage::bounded) return pr;
    pr.solutions = enumerate_below(pr.P, pr.bound->search_limit);
    pr.generators = classify_generators(pr.rec, *pr.solutions);
    pr.stage = Stage::solved;
    return pr;
}

}  // namespace diorec
