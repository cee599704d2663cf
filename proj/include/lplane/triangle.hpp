#pragma once

#include <array>
#include <utility>

#include "lplane/core.hpp"

namespace lplane {

enum class VertexId { A, B, C };

const char* vertex_name(VertexId v);

// Vertices as position vectors. The derived edges
//   a = C - B,  b = A - C,  c = B - A
// satisfy a + b + c = 0 identically. Construction rejects collinear or
// non-finite vertices.
struct Triangle {
  Vec2 A, B, C;

  Triangle(Vec2 a, Vec2 b, Vec2 c);

  Vec2 edge_a() const { return C - B; }
  Vec2 edge_b() const { return A - C; }
  Vec2 edge_c() const { return B - A; }

  Vec2 vertex(VertexId v) const;
  // Opposite side as an ordered pair (P0, P1): A -> (B, C), B -> (C, A),
  // C -> (A, B). Ordering matches the directed ratios of the Ceva product.
  std::pair<Vec2, Vec2> opposite_side(VertexId v) const;
  // The two rays leaving the vertex toward the other two vertices, in
  // opposite-side order.
  std::pair<Vec2, Vec2> vertex_rays(VertexId v) const;

  // Largest Euclidean vertex/edge magnitude; tolerance scale.
  double scale() const;
};

enum class TriangleClass {
  pure_spacelike,
  pure_timelike,
  mixed,
  has_lightlike_edge,
};

const char* triangle_class_name(TriangleClass c);

TriangleClass classify(Form form, const Triangle& tri, double char_tol = 0.0);

bool is_pure(TriangleClass c);

// S^2(u, v) = 1 - (u.v)^2 / ((u.u)(v.v)). Coincides with sin^2 of the
// enclosed angle in the Euclidean plane; may be negative in the Lorentzian
// plane.
double squared_sine(Form form, Vec2 u, Vec2 v);

// Variant with a linear (unsquared) numerator, 1 - u.v / ((u.u)(v.v)).
// Dimensionally inconsistent and breaks the law of sines; kept only so the
// verification suite can demonstrate that the squared numerator is forced.
double squared_sine_unsquared(Form form, Vec2 u, Vec2 v);

// Max pairwise deviation of the three law-of-sines ratios
//   S^2_bc / a.a,  S^2_ca / b.b,  S^2_ab / c.c,
// normalized by max(1, |ratio|). Requires all edges non-lightlike.
double law_of_sines_residual(Form form, const Triangle& tri,
                             bool squared_numerator = true);

struct CevianFoot {
  VertexId vertex;
  Vec2 point;    // on the opposite side line
  double param;  // point = P0 + param * (P1 - P0) along opposite_side(vertex)
};

// Intersection of the line through the vertex with direction `direction`
// and the opposite side line.
CevianFoot cevian_foot(const Triangle& tri, VertexId vertex, Vec2 direction,
                       double tol = kDefaultTol);

struct CevaProduct {
  double squared;  // product of squared-length ratios via inner products
  double directed; // product of directed affine ratios t/(1-t)
};

// Ceva product for feet D on BC, E on CA, F on AB. directed == 1 iff the
// cevians are concurrent; squared == directed^2.
CevaProduct ceva_product(Form form, const Triangle& tri, const CevianFoot& D,
                         const CevianFoot& E, const CevianFoot& F,
                         double tol = kDefaultTol);

struct BisectorCevian {
  Vec2 direction;  // unit bisector of the two vertex rays
  CevianFoot foot;
};

BisectorCevian angle_bisector_cevian(Form form, const Triangle& tri,
                                     VertexId vertex);

// Bisector-theorem deviation at a vertex: for vertex A with foot D on BC,
//   | b.b / c.c  -  DC.DC / BD.BD |
// normalized by max(1, |lhs|, |rhs|); cyclic for the other vertices.
double bisector_theorem_residual(Form form, const Triangle& tri,
                                 VertexId vertex);

// Intersection of the bisector cevians from A and B; the cevian from C
// passes through it (pure triangles only).
Vec2 incenter(Form form, const Triangle& tri);

// Euclidean distance from the incenter to the third bisector line, divided
// by the triangle scale.
double incenter_concurrency_residual(Form form, const Triangle& tri);

// Distance from P to the line through Q with direction dir:
//   |(P - Q) . n| / ||n||   with n orthogonal to dir under the form.
// dir must be non-lightlike.
double point_line_distance(Form form, Vec2 p, Vec2 q, Vec2 dir);

// Distances from the incenter to the three side lines, in order (BC, CA, AB).
std::array<double, 3> incenter_side_distances(Form form, const Triangle& tri);

// The common incenter-to-side distance (reported from side BC; all three
// agree for valid pure triangles).
double inradius(Form form, const Triangle& tri);

// Locus (x - center) o (x - center) = sigma * radius^2. sigma = +1 has
// timelike tangents, sigma = -1 spacelike tangents.
struct Circle {
  Vec2 center;
  double radius;
  int sigma;
};

// Incircle of a pure triangle: centered at the incenter, tangent to the
// three side lines, sigma matching the side character.
Circle incircle(Form form, const Triangle& tri);

// Plumbing: p0 + s*d0 = p1 + t*d1. Throws parallel_cevian when the
// determinant vanishes relative to the direction norms.
struct LineHit {
  Vec2 point;
  double s;
  double t;
};

LineHit intersect_lines(Vec2 p0, Vec2 d0, Vec2 p1, Vec2 d1,
                        double tol = kDefaultTol);

double euclidean_point_line_distance(Vec2 p, Vec2 q, Vec2 dir);

}  // namespace lplane
