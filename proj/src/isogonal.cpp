#include "lplane/isogonal.hpp"

#include <algorithm>
#include <cmath>

#include "lplane/bisector.hpp"

namespace lplane {

namespace {

void require_pure(Form form, const Triangle& tri, const char* who) {
  if (!is_pure(classify(form, tri)))
    throw GeometryError(Errc::not_pure,
                        std::string(who) + ": triangle is not pure");
}

Vec2 unit_cevian(Form form, Vec2 d, const char* who) {
  if ((d.x == 0.0 && d.t == 0.0) || inner(form, d, d) == 0.0)
    throw GeometryError(Errc::lightlike_cevian,
                        std::string(who) + ": lightlike cevian direction");
  return unit(form, d);
}

double ratio(Form form, Vec2 num, Vec2 den) {
  return inner(form, num, num) / inner(form, den, den);
}

}  // namespace

Vec2 centroid(const Triangle& tri) {
  return (tri.A + tri.B + tri.C) / 3.0;
}

Vec2 isogonal_direction(Form form, const Triangle& tri, VertexId vertex,
                        Vec2 d) {
  require_pure(form, tri, "isogonal_direction");
  if ((d.x == 0.0 && d.t == 0.0) || inner(form, d, d) == 0.0)
    throw GeometryError(Errc::lightlike_cevian,
                        "isogonal_direction: lightlike cevian direction");
  const auto [r0, r1] = tri.vertex_rays(vertex);
  return reflect(form, bisector_direction(form, r0, r1), d);
}

bool is_isogonal(Form form, const Triangle& tri, VertexId vertex, Vec2 d1,
                 Vec2 d2, double tol) {
  require_pure(form, tri, "is_isogonal");
  const Vec2 u1 = unit_cevian(form, d1, "is_isogonal");
  const Vec2 u2 = unit_cevian(form, d2, "is_isogonal");
  const auto [r0, r1] = tri.vertex_rays(vertex);
  const Vec2 w = bisector_direction(form, r0, r1);
  // The defect vanishes when d2 is the reflection of d1 across w, up to the
  // sign ambiguity of the unit vectors.
  const double defect = inner(form, u1 - u2, w);
  const double flipped = inner(form, u1 + u2, w);
  return std::min(std::abs(defect), std::abs(flipped)) <= tol;
}

double lemma_product_residual(Form form, const Triangle& tri, VertexId vertex,
                              const CevianFoot& D, const CevianFoot& E) {
  const auto [p0, p1] = tri.opposite_side(vertex);
  for (const CevianFoot* f : {&D, &E}) {
    if (euclidean_norm(f->point - p0) == 0.0 ||
        euclidean_norm(p1 - f->point) == 0.0)
      throw GeometryError(Errc::foot_at_vertex,
                          "lemma_product_residual: foot at a vertex");
  }
  // Build the segment vectors from the affine parameter: the foot satisfies
  // point = p0 + param * (p1 - p0), so D - p0 = param * s and
  // p1 - D = (1 - param) * s exactly. Differencing the stored points instead
  // cancels catastrophically when a reflected foot lands far outside the
  // segment.
  const Vec2 s = p1 - p0;
  const double prod = ratio(form, D.param * s, (1.0 - D.param) * s) *
                      ratio(form, E.param * s, (1.0 - E.param) * s);
  double num = 0.0, den = 0.0;
  switch (vertex) {
    case VertexId::A:
      num = inner(form, tri.edge_c(), tri.edge_c());
      den = inner(form, tri.edge_b(), tri.edge_b());
      break;
    case VertexId::B:
      num = inner(form, tri.edge_a(), tri.edge_a());
      den = inner(form, tri.edge_c(), tri.edge_c());
      break;
    case VertexId::C:
      num = inner(form, tri.edge_b(), tri.edge_b());
      den = inner(form, tri.edge_a(), tri.edge_a());
      break;
  }
  const double target = (num * num) / (den * den);
  return std::abs(prod - target) /
         std::max({1.0, std::abs(prod), std::abs(target)});
}

ConjugateTrace conjugate_cevians(Form form, const Triangle& tri, Vec2 P,
                                 double tol) {
  require_pure(form, tri, "conjugate_cevians");
  const double scale = std::max(1.0, tri.scale());
  ConjugateTrace out{};
  std::array<Vec2, 3> reflected{};
  const std::array<VertexId, 3> ids = {VertexId::A, VertexId::B, VertexId::C};
  for (int i = 0; i < 3; ++i) {
    const Vec2 v = tri.vertex(ids[i]);
    const Vec2 d = P - v;
    if (euclidean_norm(d) <= 1e-12 * scale)
      throw GeometryError(Errc::vertex_coincidence,
                          "conjugate_cevians: point coincides with vertex " +
                              std::string(vertex_name(ids[i])));
    if (std::abs(inner(form, d, d)) <=
        1e-12 * euclidean_norm(d) * euclidean_norm(d))
      throw GeometryError(Errc::lightlike_cevian,
                          "conjugate_cevians: cevian through vertex " +
                              std::string(vertex_name(ids[i])) +
                              " is lightlike");
    out.feet[i] = cevian_foot(tri, ids[i], d, tol);
    const auto [r0, r1] = tri.vertex_rays(ids[i]);
    reflected[i] = reflect(form, bisector_direction(form, r0, r1), d);
    out.reflected_feet[i] = cevian_foot(tri, ids[i], reflected[i], tol);
  }
  out.conjugate =
      intersect_lines(tri.A, reflected[0], tri.B, reflected[1], tol).point;
  out.third_line_residual =
      euclidean_point_line_distance(out.conjugate, tri.C, reflected[2]) /
      scale;
  return out;
}

Vec2 isogonal_conjugate(Form form, const Triangle& tri, Vec2 P) {
  return conjugate_cevians(form, tri, P).conjugate;
}

Vec2 lemoine_point(Form form, const Triangle& tri) {
  return isogonal_conjugate(form, tri, centroid(tri));
}

}  // namespace lplane
