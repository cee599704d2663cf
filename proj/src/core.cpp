#include "lplane/core.hpp"

namespace lplane {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::zero_vector: return "ZeroVector";
    case Errc::null_vector: return "NullVector";
    case Errc::lightlike_mirror: return "LightlikeMirror";
    case Errc::mixed_causal_character: return "MixedCausalCharacter";
    case Errc::no_rotation: return "NoRotation";
    case Errc::degenerate: return "Degenerate";
    case Errc::not_pure: return "NotPure";
    case Errc::null_edge: return "NullEdge";
    case Errc::parallel_cevian: return "ParallelCevian";
    case Errc::foot_at_vertex: return "FootAtVertex";
    case Errc::vertex_coincidence: return "VertexCoincidence";
    case Errc::lightlike_cevian: return "LightlikeCevian";
    case Errc::lightlike_line: return "LightlikeLine";
    case Errc::generator_exhausted: return "GeneratorExhausted";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

const char* causal_character_name(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::spacelike: return "spacelike";
    case CausalCharacter::timelike: return "timelike";
    case CausalCharacter::lightlike: return "lightlike";
  }
  return "unknown";
}

CausalCharacter causal_character(Form form, Vec2 v, double tol) {
  if (v.x == 0.0 && v.t == 0.0)
    throw GeometryError(Errc::zero_vector,
                        "causal_character: zero vector has no causal character");
  const double q = inner(form, v, v);
  const double band = tol * (v.x * v.x + v.t * v.t);
  if (q > band) return CausalCharacter::spacelike;
  if (q < -band) return CausalCharacter::timelike;
  return CausalCharacter::lightlike;
}

Vec2 unit(Form form, Vec2 v) {
  const double m = magnitude(form, v);
  if (m == 0.0)
    throw GeometryError(Errc::null_vector,
                        "unit: lightlike or zero vector has no unit");
  return v / m;
}

Vec2 reflect(Form form, Vec2 mirror, Vec2 v) {
  const double mm = inner(form, mirror, mirror);
  if (mm == 0.0)
    throw GeometryError(Errc::lightlike_mirror,
                        "reflect: no isometry reflects across a lightlike line");
  const double k = 2.0 * inner(form, v, mirror) / mm;
  return k * mirror - v;
}

Orientation orientation(Form form, Vec2 v) {
  const CausalCharacter c = causal_character(form, v);  // throws on zero
  if (c == CausalCharacter::lightlike)
    throw GeometryError(Errc::null_vector,
                        "orientation: undefined for lightlike vectors");
  if (c == CausalCharacter::timelike) return v.t > 0.0 ? +1 : -1;
  if (v.x != 0.0) return v.x > 0.0 ? +1 : -1;
  return v.t > 0.0 ? +1 : -1;  // Euclidean spacelike with x = 0
}

}  // namespace lplane
