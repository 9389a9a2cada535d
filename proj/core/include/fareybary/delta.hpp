#pragma once

#include "fareybary/algebraic.hpp"
#include "fareybary/bary.hpp"
#include "fareybary/farey.hpp"
#include "fareybary/geometry.hpp"

namespace fareybary {

struct DeltaResult {
    PlanePoint value;
    Rat error_bound;   // L-inf diameter of the enclosing target triangle; 0 iff exact
    long depth_used = 0;
    bool exact = false;
    bool boundary = false;  // tie-break was exercised somewhere along the way
};

// Piecewise-linear stage map: expand p to raw depth n on the Farey side
// and push its barycentric coordinates into the bary triangle of the
// same sequence.
PlanePoint delta_n(const PlanePoint& p, long n);

// Limit map with a certified error bound: refines until the enclosing
// bary triangle has L-inf diameter <= tol; exact on vertices and on
// edge-pinned points (third barycentric coordinate 0).
DeltaResult delta(const PlanePoint& p, const Rat& tol);
DeltaResult delta(const AlgebraicPoint& p, const Rat& tol);

// Operational inverse: bary-expand q and replay the sequence on the
// Farey side until the Farey triangle diameter is <= tol; exact on
// bary vertices.
DeltaResult delta_inverse(const PlanePoint& q, const Rat& tol);

// L-inf diameter of a triangle state (max coordinate difference over
// vertex pairs) as an exact rational.
Rat linf_diameter(const TriangleState& t);

}  // namespace fareybary
