#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lplane/core.hpp"

#include "oracles.hpp"

using namespace lplane;

namespace {
const Form L = Form::lorentzian();
const Form E = Form::euclidean();
}  // namespace

TEST_CASE("inner product definitions") {
  CHECK(inner(L, {1, 0}, {1, 0}) == 1.0);
  CHECK(inner(L, {1, 1}, {1, 1}) == 0.0);
  CHECK(inner(E, {3, 4}, {3, 4}) == 25.0);
  CHECK(inner(L, {2, 3}, {5, 7}) == 10.0 - 21.0);
}

TEST_CASE("inner product is symmetric and bilinear") {
  oracle::Rng rng(1);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 u{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const Vec2 v{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const Vec2 w{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const double a = rng.uniform(-3, 3);
    for (Form f : {L, E}) {
      CHECK(inner(f, u, v) == doctest::Approx(inner(f, v, u)));
      CHECK(inner(f, u + a * v, w) ==
            doctest::Approx(inner(f, u, w) + a * inner(f, v, w))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("causal character") {
  CHECK(causal_character(L, {2, 1}) == CausalCharacter::spacelike);
  CHECK(causal_character(L, {1, 2}) == CausalCharacter::timelike);
  CHECK(causal_character(L, {1, 1}) == CausalCharacter::lightlike);
  CHECK(causal_character(E, {0, -5}) == CausalCharacter::spacelike);
  CHECK_THROWS_AS(causal_character(L, {0, 0}), GeometryError);
}

TEST_CASE("causal character tolerance band") {
  CHECK(causal_character(L, {1.0, 1.0 + 1e-12}) == CausalCharacter::timelike);
  CHECK(causal_character(L, {1.0, 1.0 + 1e-12}, 1e-9) ==
        CausalCharacter::lightlike);
}

TEST_CASE("magnitude") {
  CHECK(magnitude(L, {2, 1}) == doctest::Approx(std::sqrt(3.0)));
  CHECK(magnitude(L, {1, 1}) == 0.0);
  CHECK(magnitude(L, {0, 2}) == 2.0);
  CHECK(magnitude(E, {3, 4}) == 5.0);
}

TEST_CASE("unit") {
  CHECK(unit(L, {2, 0}) == Vec2{1, 0});
  CHECK(unit(L, {0, 3}) == Vec2{0, 1});
  CHECK_THROWS_AS(unit(L, {1, 1}), GeometryError);
  CHECK_THROWS_AS(unit(L, {0, 0}), GeometryError);
}

TEST_CASE("rotation examples") {
  const Vec2 v{0.3, -1.7};
  CHECK(rotate(0.0, v) == v);
  const Vec2 back = rotate(-0.8, rotate(0.8, v));
  CHECK(back.x == doctest::Approx(v.x).epsilon(1e-14));
  CHECK(back.t == doctest::Approx(v.t).epsilon(1e-14));
  const Vec2 r = rotate(std::log(2.0), {1, 0});
  CHECK(r.x == doctest::Approx(1.25));
  CHECK(r.t == doctest::Approx(0.75));
}

TEST_CASE("rotation preserves the inner product, character, orientation") {
  oracle::Rng rng(2);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 v{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const Vec2 w{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const double phi = rng.uniform(-5, 5);
    const double before = inner(L, v, w);
    const double after = inner(L, rotate(phi, v), rotate(phi, w));
    const double scale = std::max({1.0, std::abs(before), std::abs(after)});
    CHECK(std::abs(after - before) <= 1e-9 * scale);
    if (causal_character(L, v) != CausalCharacter::lightlike) {
      CHECK(causal_character(L, rotate(phi, v)) == causal_character(L, v));
      CHECK(orientation(L, rotate(phi, v)) == orientation(L, v));
    }
  }
}

TEST_CASE("orthogonal companion") {
  CHECK(orthogonal_companion({2, 1}) == Vec2{1, 2});
  CHECK(inner(L, orthogonal_companion({2, 1}), {2, 1}) == 0.0);
  CHECK(orthogonal_companion({1, 1}) == Vec2{1, 1});
  CHECK(orthogonal_companion({1, 0}) == Vec2{0, 1});
}

TEST_CASE("orthogonal companion flips causal character") {
  oracle::Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 v{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const Vec2 n = orthogonal_companion(v);
    CHECK(inner(L, n, v) == 0.0);
    CHECK(inner(L, n, n) == -inner(L, v, v));
    const CausalCharacter cv = causal_character(L, v);
    const CausalCharacter cn = causal_character(L, n);
    if (cv == CausalCharacter::spacelike)
      CHECK(cn == CausalCharacter::timelike);
    else if (cv == CausalCharacter::timelike)
      CHECK(cn == CausalCharacter::spacelike);
    else
      CHECK(cn == CausalCharacter::lightlike);
  }
}

TEST_CASE("reflection examples") {
  const Vec2 r = reflect(L, {1, 0}, {3, 2});
  CHECK(r == Vec2{3, -2});
  const Vec2 fixed = reflect(L, {0.5, 2.0}, {0.5, 2.0});
  CHECK(fixed.x == doctest::Approx(0.5));
  CHECK(fixed.t == doctest::Approx(2.0));
  CHECK_THROWS_AS(reflect(L, {1, 1}, {3, 2}), GeometryError);
}

TEST_CASE("reflection is an involutive isometry") {
  oracle::Rng rng(4);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 m{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const Vec2 v{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    for (Form f : {L, E}) {
      if (inner(f, m, m) == 0.0) continue;
      const Vec2 r = reflect(f, m, v);
      const Vec2 back = reflect(f, m, r);
      const double scale = std::max(1.0, euclidean_norm(v));
      CHECK(euclidean_norm(back - v) <= 1e-9 * scale);
      const double qv = inner(f, v, v);
      const double qr = inner(f, r, r);
      CHECK(std::abs(qr - qv) <=
            1e-7 * std::max({1.0, std::abs(qv), std::abs(qr)}));
    }
  }
}

TEST_CASE("orientation") {
  CHECK(orientation(L, {0, 3}) == +1);
  CHECK(orientation(L, {-2, 1}) == -1);
  CHECK_THROWS_AS(orientation(L, {1, 1}), GeometryError);
  CHECK_THROWS_AS(orientation(L, {0, 0}), GeometryError);
}

TEST_CASE("error codes carry names") {
  try {
    unit(L, {1, 1});
    FAIL("expected throw");
  } catch (const GeometryError& e) {
    CHECK(std::string(errc_name(e.code())) == "NullVector");
  }
}
