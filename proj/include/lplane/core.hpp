#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Signature-generic plane algebra. Every inner product threads through a
// Form carrying the signature diag(1, epsilon): epsilon = +1 is the
// Euclidean plane, epsilon = -1 the Lorentzian (Minkowski) plane with
// components ordered (x, t).

namespace lplane {

inline constexpr double kDefaultTol = 1e-9;

enum class Errc {
  zero_vector,
  null_vector,
  lightlike_mirror,
  mixed_causal_character,
  no_rotation,
  degenerate,
  not_pure,
  null_edge,
  parallel_cevian,
  foot_at_vertex,
  vertex_coincidence,
  lightlike_cevian,
  lightlike_line,
  generator_exhausted,
  parse_error,
};

const char* errc_name(Errc code);

class GeometryError : public std::runtime_error {
public:
  GeometryError(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

struct Vec2 {
  double x = 0.0;
  double t = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double t_) : x(x_), t(t_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, t + o.t}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, t - o.t}; }
  constexpr Vec2 operator-() const { return {-x, -t}; }
  constexpr Vec2 operator*(double s) const { return {x * s, t * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, t / s}; }
  constexpr bool operator==(const Vec2&) const = default;
};

inline constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

inline double euclidean_norm(Vec2 v) { return std::hypot(v.x, v.t); }

// z-component of the Euclidean cross product; zero iff u, v parallel.
inline constexpr double cross(Vec2 u, Vec2 v) { return u.x * v.t - u.t * v.x; }

inline bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.t); }

struct Form {
  int epsilon = 1;  // +1 Euclidean, -1 Lorentzian

  static constexpr Form euclidean() { return Form{+1}; }
  static constexpr Form lorentzian() { return Form{-1}; }
  constexpr bool is_lorentzian() const { return epsilon == -1; }
  constexpr bool operator==(const Form&) const = default;
};

enum class CausalCharacter { spacelike, timelike, lightlike };

const char* causal_character_name(CausalCharacter c);

inline constexpr double inner(Form form, Vec2 u, Vec2 v) {
  return u.x * v.x + form.epsilon * u.t * v.t;
}

// Sign classification of inner(v, v). The tolerance widens the lightlike
// band relative to the squared Euclidean norm; the default is an exact
// sign test.
CausalCharacter causal_character(Form form, Vec2 v, double tol = 0.0);

inline double magnitude(Form form, Vec2 v) {
  return std::sqrt(std::abs(inner(form, v, v)));
}

// v / magnitude(v). Throws null_vector for lightlike or zero input.
Vec2 unit(Form form, Vec2 v);

// Hyperbolic rotation (boost) by phi; Lorentzian plane only.
inline Vec2 rotate(double phi, Vec2 v) {
  const double c = std::cosh(phi);
  const double s = std::sinh(phi);
  return {c * v.x + s * v.t, s * v.x + c * v.t};
}

// (t, x): Lorentzian-orthogonal to (x, t), with flipped causal character.
inline constexpr Vec2 orthogonal_companion(Vec2 v) { return {v.t, v.x}; }

// A nonzero vector orthogonal to v under the given form.
inline constexpr Vec2 form_normal(Form form, Vec2 v) {
  return form.is_lorentzian() ? Vec2{v.t, v.x} : Vec2{-v.t, v.x};
}

// Reflection across the line spanned by mirror:
//   R(v) = 2 (v.m / m.m) m - v.
// An isometry of the form; fixes mirror; involutive. Lightlike mirrors
// admit no such isometry and are rejected.
Vec2 reflect(Form form, Vec2 mirror, Vec2 v);

using Orientation = int;  // +1 or -1

// Sign of the dominant component per character class: t for timelike,
// x for spacelike. Invariant under hyperbolic rotation.
Orientation orientation(Form form, Vec2 v);

}  // namespace lplane
