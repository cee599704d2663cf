#pragma once

#include "lplane/core.hpp"

namespace lplane {

// Angle-bisector predicate: w bisects (u, v) iff
//   u.w / ||u|| == v.w / ||v||
// within a relative tolerance. u and v must be non-lightlike and nonzero.
bool is_bisector(Form form, Vec2 u, Vec2 v, Vec2 w, double tol = kDefaultTol);

// Unit bisector direction of two nonzero non-lightlike vectors sharing a
// causal character: normalize(unit(u) + unit(v)). When the unit vectors are
// exactly antiparallel the sum vanishes; the orthogonal of unit(u) is
// returned instead (both sides of the bisector identity are then zero).
Vec2 bisector_direction(Form form, Vec2 u, Vec2 v);

// The half-angle phi such that rotate(phi, alpha) is the bisector direction
// of (alpha, beta) and rotate(2*phi, alpha) = beta. Requires unit vectors of
// equal causal character and orientation; otherwise no hyperbolic rotation
// maps alpha to beta and NoRotation is thrown. Lorentzian plane only.
double bisecting_rotation_angle(Form form, Vec2 alpha, Vec2 beta);

}  // namespace lplane
