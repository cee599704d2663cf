#include "lplane/bisector.hpp"

#include <algorithm>
#include <cmath>

namespace lplane {

namespace {

void require_normalizable(Form form, Vec2 v, const char* who) {
  if ((v.x == 0.0 && v.t == 0.0) || inner(form, v, v) == 0.0)
    throw GeometryError(Errc::null_vector,
                        std::string(who) + ": lightlike or zero input");
}

}  // namespace

bool is_bisector(Form form, Vec2 u, Vec2 v, Vec2 w, double tol) {
  require_normalizable(form, u, "is_bisector");
  require_normalizable(form, v, "is_bisector");
  const double lhs = inner(form, u, w) / magnitude(form, u);
  const double rhs = inner(form, v, w) / magnitude(form, v);
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) <= tol * scale;
}

Vec2 bisector_direction(Form form, Vec2 u, Vec2 v) {
  require_normalizable(form, u, "bisector_direction");
  require_normalizable(form, v, "bisector_direction");
  if (causal_character(form, u) != causal_character(form, v))
    throw GeometryError(Errc::mixed_causal_character,
                        "bisector_direction: inputs differ in causal character");
  const Vec2 alpha = unit(form, u);
  const Vec2 beta = unit(form, v);
  const Vec2 sum = alpha + beta;
  if (sum.x == 0.0 && sum.t == 0.0) return form_normal(form, alpha);
  // The sum of two same-character vectors is never lightlike, so this
  // normalization cannot throw for valid inputs.
  return unit(form, sum);
}

double bisecting_rotation_angle(Form form, Vec2 alpha, Vec2 beta) {
  if (!form.is_lorentzian())
    throw GeometryError(Errc::no_rotation,
                        "bisecting_rotation_angle: Lorentzian plane only");
  require_normalizable(form, alpha, "bisecting_rotation_angle");
  require_normalizable(form, beta, "bisecting_rotation_angle");
  const Vec2 a = unit(form, alpha);
  const Vec2 b = unit(form, beta);
  if (causal_character(form, a) != causal_character(form, b) ||
      orientation(form, a) != orientation(form, b))
    throw GeometryError(
        Errc::no_rotation,
        "bisecting_rotation_angle: no hyperbolic rotation maps alpha to beta "
        "(causal character or orientation differ)");
  // Solve A[psi] a = b componentwise for (cosh psi, sinh psi).
  const double q = inner(form, a, a);  // +1 or -1, never 0 here
  const double c = (a.x * b.x - a.t * b.t) / q;
  const double s = (a.x * b.t - a.t * b.x) / q;
  if (c < 1.0 - 1e-6)
    throw GeometryError(Errc::no_rotation,
                        "bisecting_rotation_angle: inconsistent pair");
  return 0.5 * std::asinh(s);
}

}  // namespace lplane
