// Acceptance suite: runs every top-level criterion at its pinned tolerance
// and prints one pass/fail line each. Exit status is the failure count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "lplane/bisector.hpp"
#include "lplane/harness.hpp"
#include "lplane/isogonal.hpp"
#include "lplane/scene.hpp"
#include "lplane/triangle.hpp"

using namespace lplane;

namespace {

const Form L = Form::lorentzian();
const Form E = Form::euclidean();

int failures = 0;

void criterion(const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s  %s  (%s)\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

Triangle t0() { return Triangle({0, 1}, {-2, 0}, {2, 0}); }

CausalCharacter char_for(int i) {
  return (i & 1) ? CausalCharacter::timelike : CausalCharacter::spacelike;
}

double now_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void check_reference_triangle() {
  const Triangle tri = t0();
  const double r = 4.0 - 2.0 * std::sqrt(3.0);
  // warm-up, then timed run
  (void)incenter_side_distances(L, tri);
  const auto start = std::chrono::steady_clock::now();
  const TriangleClass cls = classify(L, tri);
  const Vec2 ic = incenter(L, tri);
  const double rad = inradius(L, tri);
  const auto d = incenter_side_distances(L, tri);
  const double elapsed = now_ms(start);

  const bool ok = cls == TriangleClass::pure_spacelike &&
                  std::abs(ic.x) <= 1e-12 && std::abs(ic.t - r) <= 1e-12 &&
                  std::abs(rad - r) <= 1e-12 &&
                  std::abs(d[0] - d[1]) <= 1e-12 &&
                  std::abs(d[1] - d[2]) <= 1e-12 &&
                  std::abs(d[0] - d[2]) <= 1e-12 && elapsed < 1.0;
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "incenter (%.15g, %.15g), inradius %.15g, %.3f ms", ic.x,
                ic.t, rad, elapsed);
  criterion("reference triangle: class, incenter, inradius, tangency", ok,
            detail);
}

void check_law_of_sines() {
  const Triangle tri = t0();
  const Vec2 a = tri.edge_a(), b = tri.edge_b(), c = tri.edge_c();
  const double r0 = squared_sine(L, b, c) / inner(L, a, a);
  const double r1 = squared_sine(L, c, a) / inner(L, b, b);
  const double r2 = squared_sine(L, a, b) / inner(L, c, c);
  bool ok = std::abs(r0 + 1.0 / 9.0) <= 1e-12 &&
            std::abs(r1 + 1.0 / 9.0) <= 1e-12 &&
            std::abs(r2 + 1.0 / 9.0) <= 1e-12;

  SuiteConfig cfg;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Triangle rt = random_nonnull_triangle(cfg, 0x100000 + i);
    worst = std::max(worst, law_of_sines_residual(L, rt));
  }
  const double elapsed = now_ms(start);
  ok = ok && worst <= 1e-9 && elapsed < 5000.0;
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "ratios -1/9, max residual %.3g over 1e4, %.0f ms", worst,
                elapsed);
  criterion("law of sines", ok, detail);
}

void check_discrimination() {
  const double res = law_of_sines_residual(L, t0(), false);
  char detail[64];
  std::snprintf(detail, sizeof(detail), "linear-numerator residual %.3g", res);
  criterion("squared-numerator discrimination", res >= 0.1, detail);
}

void check_bisector_theorem() {
  SuiteConfig cfg;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Triangle rt = random_pure_triangle(cfg, 0x200000 + i, char_for(i));
    for (VertexId v : {VertexId::A, VertexId::B, VertexId::C})
      worst = std::max(worst, bisector_theorem_residual(L, rt, v));
  }
  char detail[64];
  std::snprintf(detail, sizeof(detail), "max residual %.3g over 1e4", worst);
  criterion("bisector theorem", worst <= 1e-9, detail);
}

void check_incenter() {
  SuiteConfig cfg;
  double worst_conc = 0.0, worst_tan = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Triangle rt = random_pure_triangle(cfg, 0x300000 + i, char_for(i));
    worst_conc = std::max(worst_conc, incenter_concurrency_residual(L, rt));
    const auto d = incenter_side_distances(L, rt);
    const double hi = std::max({d[0], d[1], d[2]});
    const double lo = std::min({d[0], d[1], d[2]});
    worst_tan = std::max(worst_tan, (hi - lo) / std::max(1.0, hi));
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail),
                "concurrency %.3g, tangency agreement %.3g over 1e4",
                worst_conc, worst_tan);
  criterion("incenter concurrency and equal tangency",
            worst_conc <= 1e-9 && worst_tan <= 1e-8, detail);
}

void check_ceva() {
  SuiteConfig cfg;
  double worst = 0.0, worst_conv = 0.0;
  int done = 0;
  for (int i = 0; done < 10000 && i < 100000; ++i) {
    const Triangle rt = random_nonnull_triangle(cfg, 0x400000 + i);
    TrialRng rng(cfg.seed, 0x480000 + i);
    Vec2 p;
    if (i & 1) {
      p = {rng.uniform(-20, 20), rng.uniform(-20, 20)};  // often exterior
    } else {
      const double u = rng.uniform(0.05, 0.9);
      const double v = rng.uniform(0.05, 0.95 - u);
      p = rt.A * u + rt.B * v + rt.C * (1.0 - u - v);
    }
    try {
      const CevianFoot d = cevian_foot(rt, VertexId::A, p - rt.A);
      const CevianFoot e = cevian_foot(rt, VertexId::B, p - rt.B);
      const CevianFoot f = cevian_foot(rt, VertexId::C, p - rt.C);
      const CevaProduct cp = ceva_product(L, rt, d, e, f);
      worst = std::max({worst, std::abs(cp.directed - 1.0),
                        std::abs(cp.squared - 1.0)});
      // converse: rebuild the cevians from the feet and intersect
      const LineHit hit =
          intersect_lines(rt.A, d.point - rt.A, rt.B, e.point - rt.B);
      worst_conv = std::max(
          worst_conv,
          euclidean_point_line_distance(hit.point, rt.C, f.point - rt.C) /
              std::max(1.0, rt.scale()));
      ++done;
    } catch (const GeometryError&) {
    }
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail),
                "max product deviation %.3g, converse %.3g over %d", worst,
                worst_conv, done);
  criterion("ceva product and converse",
            done == 10000 && worst <= 1e-9 && worst_conv <= 1e-9, detail);
}

void check_lemma() {
  SuiteConfig cfg;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Triangle rt = random_pure_triangle(cfg, 0x500000 + i, char_for(i));
    TrialRng rng(cfg.seed, 0x580000 + i);
    for (VertexId v : {VertexId::A, VertexId::B, VertexId::C}) {
      for (int attempt = 0; attempt < 10000; ++attempt) {
        const auto [p0, p1] = rt.opposite_side(v);
        double t;
        do {
          t = rng.uniform(-1.0, 2.0);
        } while (std::abs(t) < 0.05 || std::abs(1.0 - t) < 0.05);
        const Vec2 d = p0 + t * (p1 - p0) - rt.vertex(v);
        try {
          const Vec2 e = isogonal_direction(L, rt, v, d);
          worst = std::max(worst,
                           lemma_product_residual(L, rt, v,
                                                  cevian_foot(rt, v, d),
                                                  cevian_foot(rt, v, e)));
          break;
        } catch (const GeometryError&) {
        }
      }
    }
  }
  char detail[64];
  std::snprintf(detail, sizeof(detail), "max residual %.3g over 3e4 pairs",
                worst);
  criterion("isogonal product identity", worst <= 1e-8, detail);
}

void check_conjugate() {
  SuiteConfig cfg;
  double worst_third = 0.0, worst_inv = 0.0, worst_fix = 0.0;
  int done = 0;
  for (int i = 0; done < 1000 && i < 100000; ++i) {
    const Triangle rt = random_pure_triangle(cfg, 0x600000 + i, char_for(i));
    const double scale = std::max(1.0, rt.scale());
    TrialRng rng(cfg.seed, 0x680000 + i);
    const Vec2 p{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    try {
      const ConjugateTrace trace = conjugate_cevians(L, rt, p);
      if (euclidean_norm(trace.conjugate) > 100.0 * scale) continue;
      const Vec2 back = isogonal_conjugate(L, rt, trace.conjugate);
      const Vec2 ic = incenter(L, rt);
      worst_third = std::max(worst_third, trace.third_line_residual);
      worst_inv = std::max(worst_inv, euclidean_norm(back - p) / scale);
      worst_fix = std::max(
          worst_fix, euclidean_norm(isogonal_conjugate(L, rt, ic) - ic) / scale);
      ++done;
    } catch (const GeometryError&) {
    }
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "third cevian %.3g, involution %.3g, fixed point %.3g over %d",
                worst_third, worst_inv, worst_fix, done);
  criterion("isogonal conjugate theorem",
            done == 1000 && worst_third <= 1e-8 && worst_inv <= 1e-7 &&
                worst_fix <= 1e-9,
            detail);
}

void check_rotation_equivalence() {
  SuiteConfig cfg;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    TrialRng rng(cfg.seed, 0x700000 + i);
    const Vec2 base = (i & 1) ? Vec2{0, 1} : Vec2{1, 0};
    const double sign = rng.coin() ? 1.0 : -1.0;
    const Vec2 alpha = sign * rotate(rng.uniform(-3, 3), base);
    const Vec2 beta = sign * rotate(rng.uniform(-3, 3), base);
    const double phi = bisecting_rotation_angle(L, alpha, beta);
    const Vec2 mid = rotate(phi, alpha);
    const Vec2 w = bisector_direction(L, alpha, beta);
    worst = std::max(
        worst, std::abs(cross(mid, w)) / std::max(1.0, euclidean_norm(mid)));
    worst = std::max(worst, euclidean_norm(rotate(2.0 * phi, alpha) - beta));
  }
  char detail[64];
  std::snprintf(detail, sizeof(detail), "max deviation %.3g over 1e4", worst);
  criterion("bisecting rotation equivalence", worst <= 1e-9, detail);
}

void check_euclidean() {
  const Triangle tri(Vec2{0, 0}, Vec2{4, 0}, Vec2{0, 3});
  const Vec2 ic = incenter(E, tri);
  bool ok = std::abs(ic.x - 1.0) <= 1e-12 && std::abs(ic.t - 1.0) <= 1e-12;

  SuiteConfig cfg;
  double worst = 0.0;
  int done = 0;
  for (int i = 0; done < 1000 && i < 100000; ++i) {
    TrialRng rng(cfg.seed, 0x800000 + i);
    Vec2 pts[3];
    for (auto& q : pts)
      q = {rng.uniform(-10, 10), rng.uniform(-10, 10)};
    if (std::abs(cross(pts[1] - pts[0], pts[2] - pts[0])) < 0.1) continue;
    const Triangle rt(pts[0], pts[1], pts[2]);
    worst = std::max(worst,
                     euclidean_crosscheck(rt) / std::max(1.0, rt.scale()));
    ++done;
  }
  ok = ok && done == 1000 && worst <= 1e-10;
  char detail[96];
  std::snprintf(detail, sizeof(detail),
                "3-4-5 incenter (%.15g, %.15g), crosscheck %.3g over %d",
                ic.x, ic.t, worst, done);
  criterion("euclidean regression", ok, detail);
}

void check_determinism() {
  SuiteConfig cfg;
  cfg.seed = 42;
  cfg.trials = 1000;
  const SuiteReport r1 = run_suite(cfg);
  const SuiteReport r2 = run_suite(cfg);
  const std::string s1 = to_json(r1).dump();
  const std::string s2 = to_json(r2).dump();
  char detail[64];
  std::snprintf(detail, sizeof(detail), "report %zu bytes, suite %s",
                s1.size(), r1.passed() ? "passed" : "FAILED");
  criterion("deterministic verification run", s1 == s2 && r1.passed(), detail);
}

}  // namespace

int main() {
  check_reference_triangle();
  check_law_of_sines();
  check_discrimination();
  check_bisector_theorem();
  check_incenter();
  check_ceva();
  check_lemma();
  check_conjugate();
  check_rotation_equivalence();
  check_euclidean();
  check_determinism();
  std::printf("%s: %d criterion failure(s)\n",
              failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              failures);
  return failures;
}
