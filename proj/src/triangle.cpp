#include "lplane/triangle.hpp"

#include <algorithm>
#include <cmath>

#include "lplane/bisector.hpp"

namespace lplane {

namespace {

constexpr double kCollinearTol = 1e-12;

double side_ratio(Form form, Vec2 num, Vec2 den) {
  return inner(form, num, num) / inner(form, den, den);
}

double normalized_gap(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace

const char* vertex_name(VertexId v) {
  switch (v) {
    case VertexId::A: return "A";
    case VertexId::B: return "B";
    case VertexId::C: return "C";
  }
  return "?";
}

const char* triangle_class_name(TriangleClass c) {
  switch (c) {
    case TriangleClass::pure_spacelike: return "pure_spacelike";
    case TriangleClass::pure_timelike: return "pure_timelike";
    case TriangleClass::mixed: return "mixed";
    case TriangleClass::has_lightlike_edge: return "has_lightlike_edge";
  }
  return "unknown";
}

Triangle::Triangle(Vec2 a, Vec2 b, Vec2 c) : A(a), B(b), C(c) {
  if (!finite(a) || !finite(b) || !finite(c))
    throw GeometryError(Errc::degenerate, "Triangle: non-finite vertex");
  const double s = std::max({euclidean_norm(B - A), euclidean_norm(C - B),
                             euclidean_norm(A - C)});
  if (s == 0.0 || std::abs(cross(B - A, C - A)) <= kCollinearTol * s * s)
    throw GeometryError(Errc::degenerate, "Triangle: collinear vertices");
}

Vec2 Triangle::vertex(VertexId v) const {
  switch (v) {
    case VertexId::A: return A;
    case VertexId::B: return B;
    case VertexId::C: return C;
  }
  return A;
}

std::pair<Vec2, Vec2> Triangle::opposite_side(VertexId v) const {
  switch (v) {
    case VertexId::A: return {B, C};
    case VertexId::B: return {C, A};
    case VertexId::C: return {A, B};
  }
  return {B, C};
}

std::pair<Vec2, Vec2> Triangle::vertex_rays(VertexId v) const {
  switch (v) {
    case VertexId::A: return {B - A, C - A};
    case VertexId::B: return {C - B, A - B};
    case VertexId::C: return {A - C, B - C};
  }
  return {B - A, C - A};
}

double Triangle::scale() const {
  return std::max({euclidean_norm(A), euclidean_norm(B), euclidean_norm(C),
                   euclidean_norm(B - A), euclidean_norm(C - B),
                   euclidean_norm(A - C)});
}

TriangleClass classify(Form form, const Triangle& tri, double char_tol) {
  const CausalCharacter ca = causal_character(form, tri.edge_a(), char_tol);
  const CausalCharacter cb = causal_character(form, tri.edge_b(), char_tol);
  const CausalCharacter cc = causal_character(form, tri.edge_c(), char_tol);
  if (ca == CausalCharacter::lightlike || cb == CausalCharacter::lightlike ||
      cc == CausalCharacter::lightlike)
    return TriangleClass::has_lightlike_edge;
  if (ca == cb && cb == cc)
    return ca == CausalCharacter::spacelike ? TriangleClass::pure_spacelike
                                            : TriangleClass::pure_timelike;
  return TriangleClass::mixed;
}

bool is_pure(TriangleClass c) {
  return c == TriangleClass::pure_spacelike ||
         c == TriangleClass::pure_timelike;
}

double squared_sine(Form form, Vec2 u, Vec2 v) {
  const double uu = inner(form, u, u);
  const double vv = inner(form, v, v);
  if (uu == 0.0 || vv == 0.0)
    throw GeometryError(Errc::null_vector, "squared_sine: lightlike input");
  const double uv = inner(form, u, v);
  return 1.0 - (uv * uv) / (uu * vv);
}

double squared_sine_unsquared(Form form, Vec2 u, Vec2 v) {
  const double uu = inner(form, u, u);
  const double vv = inner(form, v, v);
  if (uu == 0.0 || vv == 0.0)
    throw GeometryError(Errc::null_vector, "squared_sine: lightlike input");
  return 1.0 - inner(form, u, v) / (uu * vv);
}

double law_of_sines_residual(Form form, const Triangle& tri,
                             bool squared_numerator) {
  const Vec2 a = tri.edge_a();
  const Vec2 b = tri.edge_b();
  const Vec2 c = tri.edge_c();
  const double aa = inner(form, a, a);
  const double bb = inner(form, b, b);
  const double cc = inner(form, c, c);
  if (aa == 0.0 || bb == 0.0 || cc == 0.0)
    throw GeometryError(Errc::null_edge, "law_of_sines_residual: null edge");
  auto s2 = [&](Vec2 u, Vec2 v) {
    return squared_numerator ? squared_sine(form, u, v)
                             : squared_sine_unsquared(form, u, v);
  };
  const double r0 = s2(b, c) / aa;
  const double r1 = s2(c, a) / bb;
  const double r2 = s2(a, b) / cc;
  const double scale = std::max({1.0, std::abs(r0), std::abs(r1), std::abs(r2)});
  return std::max({std::abs(r0 - r1), std::abs(r1 - r2), std::abs(r0 - r2)}) /
         scale;
}

LineHit intersect_lines(Vec2 p0, Vec2 d0, Vec2 p1, Vec2 d1, double tol) {
  const double det = d1.x * d0.t - d0.x * d1.t;
  if (std::abs(det) <= tol * euclidean_norm(d0) * euclidean_norm(d1))
    throw GeometryError(Errc::parallel_cevian,
                        "intersect_lines: parallel directions");
  const Vec2 rhs = p1 - p0;
  const double s = (d1.x * rhs.t - d1.t * rhs.x) / det;
  const double t = (d0.x * rhs.t - d0.t * rhs.x) / det;
  return {p0 + s * d0, s, t};
}

double euclidean_point_line_distance(Vec2 p, Vec2 q, Vec2 dir) {
  return std::abs(cross(dir, p - q)) / euclidean_norm(dir);
}

CevianFoot cevian_foot(const Triangle& tri, VertexId vertex, Vec2 direction,
                       double tol) {
  const auto [p0, p1] = tri.opposite_side(vertex);
  const LineHit hit =
      intersect_lines(tri.vertex(vertex), direction, p0, p1 - p0, tol);
  return {vertex, hit.point, hit.t};
}

CevaProduct ceva_product(Form form, const Triangle& tri, const CevianFoot& D,
                         const CevianFoot& E, const CevianFoot& F, double tol) {
  if (inner(form, tri.edge_a(), tri.edge_a()) == 0.0 ||
      inner(form, tri.edge_b(), tri.edge_b()) == 0.0 ||
      inner(form, tri.edge_c(), tri.edge_c()) == 0.0)
    throw GeometryError(Errc::null_edge, "ceva_product: null edge");
  for (const CevianFoot* f : {&D, &E, &F}) {
    if (std::abs(1.0 - f->param) <= tol * std::max(1.0, std::abs(f->param)))
      throw GeometryError(Errc::foot_at_vertex,
                          "ceva_product: ratio denominator vanishes");
  }
  // Directed affine ratios along (B->C), (C->A), (A->B).
  const double directed = (D.param / (1.0 - D.param)) *
                          (E.param / (1.0 - E.param)) *
                          (F.param / (1.0 - F.param));
  // Squared-length route through the inner products themselves.
  const double squared =
      side_ratio(form, F.point - tri.A, tri.B - F.point) *
      side_ratio(form, D.point - tri.B, tri.C - D.point) *
      side_ratio(form, E.point - tri.C, tri.A - E.point);
  return {squared, directed};
}

BisectorCevian angle_bisector_cevian(Form form, const Triangle& tri,
                                     VertexId vertex) {
  const auto [r0, r1] = tri.vertex_rays(vertex);
  const Vec2 w = bisector_direction(form, r0, r1);
  // A bisector cevian of a pure triangle always meets the opposite side
  // line; cevian_foot throws ParallelCevian otherwise.
  return {w, cevian_foot(tri, vertex, w)};
}

double bisector_theorem_residual(Form form, const Triangle& tri,
                                 VertexId vertex) {
  const BisectorCevian cev = angle_bisector_cevian(form, tri, vertex);
  const Vec2 foot = cev.foot.point;
  double lhs = 0.0, rhs = 0.0;
  switch (vertex) {
    case VertexId::A:
      lhs = side_ratio(form, tri.edge_b(), tri.edge_c());
      rhs = side_ratio(form, tri.C - foot, foot - tri.B);
      break;
    case VertexId::B:
      lhs = side_ratio(form, tri.edge_c(), tri.edge_a());
      rhs = side_ratio(form, tri.A - foot, foot - tri.C);
      break;
    case VertexId::C:
      lhs = side_ratio(form, tri.edge_a(), tri.edge_b());
      rhs = side_ratio(form, tri.B - foot, foot - tri.A);
      break;
  }
  return normalized_gap(lhs, rhs);
}

namespace {

void require_pure(Form form, const Triangle& tri, const char* who) {
  if (!is_pure(classify(form, tri)))
    throw GeometryError(Errc::not_pure,
                        std::string(who) + ": triangle is not pure");
}

}  // namespace

Vec2 incenter(Form form, const Triangle& tri) {
  require_pure(form, tri, "incenter");
  const Vec2 wa = angle_bisector_cevian(form, tri, VertexId::A).direction;
  const Vec2 wb = angle_bisector_cevian(form, tri, VertexId::B).direction;
  return intersect_lines(tri.A, wa, tri.B, wb).point;
}

double incenter_concurrency_residual(Form form, const Triangle& tri) {
  const Vec2 ic = incenter(form, tri);
  const Vec2 wc = angle_bisector_cevian(form, tri, VertexId::C).direction;
  return euclidean_point_line_distance(ic, tri.C, wc) /
         std::max(1.0, tri.scale());
}

double point_line_distance(Form form, Vec2 p, Vec2 q, Vec2 dir) {
  const Vec2 n = form_normal(form, dir);
  const double mn = magnitude(form, n);
  if (mn == 0.0)
    throw GeometryError(Errc::lightlike_line,
                        "point_line_distance: lightlike line");
  return std::abs(inner(form, p - q, n)) / mn;
}

std::array<double, 3> incenter_side_distances(Form form, const Triangle& tri) {
  const Vec2 ic = incenter(form, tri);
  return {point_line_distance(form, ic, tri.B, tri.edge_a()),
          point_line_distance(form, ic, tri.C, tri.edge_b()),
          point_line_distance(form, ic, tri.A, tri.edge_c())};
}

double inradius(Form form, const Triangle& tri) {
  return incenter_side_distances(form, tri)[0];
}

Circle incircle(Form form, const Triangle& tri) {
  const TriangleClass cls = classify(form, tri);
  if (!is_pure(cls))
    throw GeometryError(Errc::not_pure, "incircle: triangle is not pure");
  const int sigma = cls == TriangleClass::pure_timelike ? +1 : -1;
  return {incenter(form, tri), inradius(form, tri), sigma};
}

}  // namespace lplane
