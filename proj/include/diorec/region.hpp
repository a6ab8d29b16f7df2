#ifndef DIOREC_REGION_HPP
#define DIOREC_REGION_HPP

// Dehomogenization of the degree-3 invariant to a bivariate cubic on the
// unit square, and the rational polygons ("avoidance regions") over which it
// gets minimized. A Region is an intersection of half-planes clipped to the
// unit square; everything about it (membership, vertices, boundary edges) is
// decided in exact rational arithmetic.

#include <array>
#include <utility>
#include <vector>

#include "diorec/multipoly.hpp"
#include "diorec/numbers.hpp"

namespace diorec {

// variable list for dehomogenized cubics; s is the senior variable so the
// canonical rendering matches displays like 2s^3 + 2s^2t + ...
const std::vector<std::string>& plane_vars();

// f(t, s) = P(t, s, 1) for homogeneous degree-3 P(x, y, z)
MultiPoly dehomogenize(const MultiPoly& P);

// a rational point in the plane
struct PlanePoint {
    Rat t, s;
    bool operator==(const PlanePoint& o) const { return t == o.t && s == o.s; }
    bool operator<(const PlanePoint& o) const { return t < o.t || (t == o.t && s < o.s); }
};

struct Constraint {
    MultiPoly form;  // linear polynomial over plane_vars()
    bool geq;        // form >= 0 when true, form <= 0 when false

    std::string to_string() const;
};

struct Region {
    std::string name;                     // e.g. "region-1"
    std::vector<Constraint> constraints;  // beyond the implicit unit square

    bool contains(const Rat& t, const Rat& s) const;
    // polygon corners: pairwise boundary-line intersections that satisfy
    // every constraint; sorted, deduplicated; empty iff the region is empty
    std::vector<PlanePoint> vertices() const;
    // boundary segments of the clipped polygon, each with distinct endpoints
    std::vector<std::array<PlanePoint, 2>> edges() const;
};

// the two halves of the avoidance region R_ab of the backward reduction:
//   which = 1: { 1 - a s - b t <= 0 }  (intersected with the unit square)
//   which = 2: { 1 - a s - b t - t >= 0 }
Region avoidance_region(const Int& a, const Int& b, int which);

}  // namespace diorec

#endif
