#pragma once

#include <array>

#include "lplane/triangle.hpp"

namespace lplane {

Vec2 centroid(const Triangle& tri);

// Reflection of a cevian direction across the angle bisector at the vertex.
Vec2 isogonal_direction(Form form, const Triangle& tri, VertexId vertex,
                        Vec2 d);

// d1 and d2 are isogonal at the vertex iff (unit(d1) - unit(d2)) is
// orthogonal to the vertex bisector direction.
bool is_isogonal(Form form, const Triangle& tri, VertexId vertex, Vec2 d1,
                 Vec2 d2, double tol = kDefaultTol);

// For isogonal cevians from vertex A with feet D, E on line BC:
//   | BD.BD/DC.DC * BE.BE/EC.EC  -  (c.c)^2/(b.b)^2 |
// normalized by max(1, |lhs|, |rhs|); cyclic for the other vertices.
double lemma_product_residual(Form form, const Triangle& tri, VertexId vertex,
                              const CevianFoot& D, const CevianFoot& E);

struct ConjugateTrace {
  std::array<CevianFoot, 3> feet;            // D on BC, E on CA, F on AB
  std::array<CevianFoot, 3> reflected_feet;  // feet of the reflected cevians
  Vec2 conjugate;
  // Euclidean distance of the conjugate from the third reflected cevian
  // line, divided by the triangle scale.
  double third_line_residual;
};

// Cevians vertex -> P, their reflections across the vertex bisectors, and
// the concurrency point of the reflected cevians.
ConjugateTrace conjugate_cevians(Form form, const Triangle& tri, Vec2 P,
                                 double tol = kDefaultTol);

Vec2 isogonal_conjugate(Form form, const Triangle& tri, Vec2 P);

// Isogonal conjugate of the centroid (symmedian point).
Vec2 lemoine_point(Form form, const Triangle& tri);

}  // namespace lplane
