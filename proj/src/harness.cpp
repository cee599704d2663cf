#include "lplane/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "lplane/bisector.hpp"

namespace lplane {

namespace {

constexpr long kMaxRejections = 1000000;
// Euclidean-area floor for generated triangles, relative to scale^2; keeps
// the intersection solves well-conditioned at the suite tolerances.
constexpr double kAreaMargin = 1e-2;

std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const Triangle& reference_triangle() {
  static const Triangle t0({0, 1}, {-2, 0}, {2, 0});
  return t0;
}

}  // namespace

const char* character_filter_name(CharacterFilter f) {
  switch (f) {
    case CharacterFilter::spacelike: return "spacelike";
    case CharacterFilter::timelike: return "timelike";
    case CharacterFilter::both: return "both";
  }
  return "unknown";
}

std::optional<CharacterFilter> parse_character_filter(const std::string& s) {
  if (s == "spacelike") return CharacterFilter::spacelike;
  if (s == "timelike") return CharacterFilter::timelike;
  if (s == "both") return CharacterFilter::both;
  return std::nullopt;
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed;
  const std::uint64_t a = splitmix64(s);
  s = a ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
  state_ = splitmix64(s);
}

std::uint64_t TrialRng::next() { return splitmix64(state_); }

double TrialRng::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double TrialRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

bool TrialRng::coin() { return (next() & 1) != 0; }

bool SuiteReport::passed() const {
  for (const auto& p : properties)
    if (!p.passed()) return false;
  return true;
}

namespace {

bool edges_clear_margin(Form form, const Triangle& tri, double margin) {
  for (Vec2 e : {tri.edge_a(), tri.edge_b(), tri.edge_c()}) {
    const double n2 = e.x * e.x + e.t * e.t;
    if (std::abs(inner(form, e, e)) < margin * n2) return false;
  }
  return true;
}

bool well_conditioned(const Triangle& tri, double scale) {
  return std::abs(cross(tri.B - tri.A, tri.C - tri.A)) >=
         kAreaMargin * scale * scale;
}

Triangle sample_triangle(const SuiteConfig& config, TrialRng& rng,
                         std::function<bool(const Triangle&)> accept,
                         GeneratorStats* stats) {
  for (long attempt = 0; attempt < kMaxRejections; ++attempt) {
    Vec2 pts[3];
    for (auto& p : pts) {
      p.x = rng.uniform(-config.scale, config.scale);
      p.t = rng.uniform(-config.scale, config.scale);
    }
    try {
      Triangle tri(pts[0], pts[1], pts[2]);
      if (well_conditioned(tri, config.scale) && accept(tri)) return tri;
    } catch (const GeometryError&) {
      // collinear sample, fall through to rejection
    }
    if (stats) ++stats->triangle_rejections;
  }
  throw GeometryError(Errc::generator_exhausted,
                      "sample_triangle: rejection bound exceeded");
}

}  // namespace

Triangle random_pure_triangle(const SuiteConfig& config, std::uint64_t index,
                              CausalCharacter which, GeneratorStats* stats) {
  const Form form = Form::lorentzian();
  const TriangleClass want = which == CausalCharacter::timelike
                                 ? TriangleClass::pure_timelike
                                 : TriangleClass::pure_spacelike;
  TrialRng rng(config.seed, index);
  return sample_triangle(
      config, rng,
      [&](const Triangle& tri) {
        return edges_clear_margin(form, tri, config.lightcone_margin) &&
               classify(form, tri) == want;
      },
      stats);
}

Triangle random_nonnull_triangle(const SuiteConfig& config,
                                 std::uint64_t index, GeneratorStats* stats) {
  const Form form = Form::lorentzian();
  TrialRng rng(config.seed, index);
  return sample_triangle(
      config, rng,
      [&](const Triangle& tri) {
        return edges_clear_margin(form, tri, config.lightcone_margin);
      },
      stats);
}

double euclidean_crosscheck(const Triangle& tri) {
  const Form form = Form::euclidean();
  const double la = magnitude(form, tri.edge_a());
  const double lb = magnitude(form, tri.edge_b());
  const double lc = magnitude(form, tri.edge_c());
  const Vec2 classical =
      (la * tri.A + lb * tri.B + lc * tri.C) / (la + lb + lc);
  return euclidean_norm(incenter(form, tri) - classical);
}

namespace {

struct SuiteContext {
  const SuiteConfig& config;
  GeneratorStats stats;
  std::vector<PropertyReport> reports;

  CausalCharacter character_for(std::uint64_t index) const {
    switch (config.character) {
      case CharacterFilter::spacelike: return CausalCharacter::spacelike;
      case CharacterFilter::timelike: return CausalCharacter::timelike;
      case CharacterFilter::both:
        return (index & 1) ? CausalCharacter::timelike
                           : CausalCharacter::spacelike;
    }
    return CausalCharacter::spacelike;
  }

  // Evaluates `trial(index)` for each index; records residuals against
  // tol_mult * config.tol.
  void run_property(const std::string& name, double tol_mult,
                    const std::function<double(std::uint64_t,
                                               std::array<Vec2, 3>&)>& trial) {
    PropertyReport rep;
    rep.name = name;
    rep.tol = tol_mult * config.tol;
    for (int i = 0; i < config.trials; ++i) {
      std::array<Vec2, 3> verts{};
      const double r = trial(static_cast<std::uint64_t>(i), verts);
      rep.max_residual = std::max(rep.max_residual, r);
      if (r > rep.tol) rep.failures.push_back({i, verts, r});
      ++rep.trials;
    }
    reports.push_back(std::move(rep));
  }
};

std::array<Vec2, 3> verts_of(const Triangle& tri) {
  return {tri.A, tri.B, tri.C};
}

// Stream offsets keep every property on its own independent trial streams.
enum : std::uint64_t {
  kStreamLawOfSines = 0x10000000ULL,
  kStreamBisectorPredicate = 0x20000000ULL,
  kStreamRotation = 0x30000000ULL,
  kStreamBisectorTheorem = 0x40000000ULL,
  kStreamIncenter = 0x50000000ULL,
  kStreamTangency = 0x60000000ULL,
  kStreamCeva = 0x70000000ULL,
  kStreamCevaConverse = 0x80000000ULL,
  kStreamLemma = 0x90000000ULL,
  kStreamConjugate = 0xa0000000ULL,
  kStreamInvolution = 0xb0000000ULL,
  kStreamFixedPoint = 0xc0000000ULL,
  kStreamEuclidean = 0xd0000000ULL,
  kPointSubstream = 0x8000000ULL,  // offsets point streams off triangle streams
};

// A nonzero non-lightlike vector of the requested character, built from a
// boost of a canonical axis.
Vec2 random_character_vector(TrialRng& rng, CausalCharacter which) {
  const Vec2 base =
      which == CausalCharacter::timelike ? Vec2{0, 1} : Vec2{1, 0};
  const double phi = rng.uniform(-3.0, 3.0);
  const double len = rng.uniform(0.1, 10.0);
  const double sign = rng.coin() ? 1.0 : -1.0;
  return sign * len * rotate(phi, base);
}

double bisector_defect(Form form, Vec2 u, Vec2 v, Vec2 w) {
  const double lhs = inner(form, u, w) / magnitude(form, u);
  const double rhs = inner(form, v, w) / magnitude(form, v);
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

Triangle euclidean_random_triangle(const SuiteConfig& config, TrialRng& rng,
                                   GeneratorStats* stats) {
  for (long attempt = 0; attempt < kMaxRejections; ++attempt) {
    Vec2 pts[3];
    for (auto& p : pts) {
      p.x = rng.uniform(-config.scale, config.scale);
      p.t = rng.uniform(-config.scale, config.scale);
    }
    try {
      Triangle tri(pts[0], pts[1], pts[2]);
      if (std::abs(cross(tri.B - tri.A, tri.C - tri.A)) >=
          1e-3 * config.scale * config.scale)
        return tri;
    } catch (const GeometryError&) {
    }
    if (stats) ++stats->triangle_rejections;
  }
  throw GeometryError(Errc::generator_exhausted,
                      "euclidean_random_triangle: rejection bound exceeded");
}

// Samples a point admissible for conjugate_cevians: cevians exist, no
// lightlike direction, and the conjugate stays within a bounded blowup of
// the triangle scale.
Vec2 sample_conjugate_point(Form form, const Triangle& tri,
                            const SuiteConfig& config, TrialRng& rng,
                            GeneratorStats& stats) {
  for (long attempt = 0; attempt < kMaxRejections; ++attempt) {
    const Vec2 p{rng.uniform(-config.scale, config.scale),
                 rng.uniform(-config.scale, config.scale)};
    try {
      const ConjugateTrace trace = conjugate_cevians(form, tri, p);
      if (euclidean_norm(trace.conjugate) <= 100.0 * std::max(1.0, tri.scale()))
        return p;
      ++stats.point_rejections;
    } catch (const GeometryError& e) {
      if (e.code() == Errc::lightlike_cevian)
        ++stats.lightlike_cevian_rejections;
      else
        ++stats.point_rejections;
    }
  }
  throw GeometryError(Errc::generator_exhausted,
                      "sample_conjugate_point: rejection bound exceeded");
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  if (config.trials < 1)
    throw std::invalid_argument("run_suite: trials must be >= 1");
  if (config.tol <= 0.0)
    throw std::invalid_argument("run_suite: tol must be positive");
  if (config.scale <= 0.0)
    throw std::invalid_argument("run_suite: scale must be positive");
  if (config.lightcone_margin <= 0.0)
    throw std::invalid_argument("run_suite: lightcone_margin must be positive");

  const Form lor = Form::lorentzian();
  SuiteContext ctx{config, {}, {}};

  // Law of sines over arbitrary non-null-edge triangles; index 0 pins the
  // reference triangle so the uncorrected squared-sine variant is caught
  // deterministically.
  ctx.run_property("law_of_sines", 1.0,
                   [&](std::uint64_t i, std::array<Vec2, 3>& verts) {
                     const Triangle tri =
                         i == 0 ? reference_triangle()
                                : random_nonnull_triangle(
                                      config, kStreamLawOfSines + i, &ctx.stats);
                     verts = verts_of(tri);
                     return law_of_sines_residual(lor, tri,
                                                  !config.unsquared_sine);
                   });

  // Bisector construction satisfies the bisector identity.
  ctx.run_property(
      "bisector_predicate", 1.0,
      [&](std::uint64_t i, std::array<Vec2, 3>& verts) {
        TrialRng rng(config.seed, kStreamBisectorPredicate + i);
        const CausalCharacter which = ctx.character_for(i);
        const Vec2 u = random_character_vector(rng, which);
        const Vec2 v = random_character_vector(rng, which);
        verts = {u, v, {0, 0}};
        return bisector_defect(lor, u, v, bisector_direction(lor, u, v));
      });

  // Half-angle rotation reaches the bisector and the full angle reaches the
  // second vector.
  ctx.run_property(
      "bisector_rotation_equivalence", 1.0,
      [&](std::uint64_t i, std::array<Vec2, 3>& verts) {
        TrialRng rng(config.seed, kStreamRotation + i);
        const CausalCharacter which = ctx.character_for(i);
        const Vec2 base =
            which == CausalCharacter::timelike ? Vec2{0, 1} : Vec2{1, 0};
        const double sign = rng.coin() ? 1.0 : -1.0;
        const Vec2 alpha = sign * rotate(rng.uniform(-3.0, 3.0), base);
        const Vec2 beta = sign * rotate(rng.uniform(-3.0, 3.0), base);
        verts = {alpha, beta, {0, 0}};
        const double phi = bisecting_rotation_angle(lor, alpha, beta);
        const Vec2 mid = rotate(phi, alpha);
        const Vec2 w = bisector_direction(lor, alpha, beta);
        const double parallel_gap =
            std::abs(cross(mid, w)) / std::max(1.0, euclidean_norm(mid));
        const double closure =
            euclidean_norm(rotate(2.0 * phi, alpha) - beta);
        return std::max(parallel_gap, closure);
      });

  // Bisector theorem at every vertex of a pure triangle.
  ctx.run_property(
      "bisector_theorem", 1.0,
      [&](std::uint64_t i, std::array<Vec2, 3>& verts) {
        const Triangle tri =
            random_pure_triangle(config, kStreamBisectorTheorem + i,
                                 ctx.character_for(i), &ctx.stats);
        verts = verts_of(tri);
        double r = 0.0;
        for (VertexId v : {VertexId::A, VertexId::B, VertexId::C})
          r = std::max(r, bisector_theorem_residual(lor, tri, v));
        return r;
      });

  // The three bisector cevians are concurrent.
  ctx.run_property(
      "incenter_concurrency", 1.0,
      [&](std::uint64_t i, std::array<Vec2, 3>& verts) {
        const Triangle tri = random_pure_triangle(
            config, kStreamIncenter + i, ctx.character_for(i), &ctx.stats);
        verts = verts_of(tri);
        return incenter_concurrency_residual(lor, tri);
      });

  // Equal distances from the concurrency point to the three side lines.
  ctx.run_property(
      "incircle_tangency", 10.0,
      [&](std::uint64_t i, std::array<Vec2, 3>& verts) {
        const Triangle tri = random_pure_triangle(
            config, kStreamTangency + i, ctx.character_for(i), &ctx.stats);
        verts = verts_of(tri);
        const auto d = incenter_side_distances(lor, tri);
        const double hi = std::max({d[0], d[1], d[2]});
        const double lo = std::min({d[0], d[1], d[2]});
        return (hi - lo) / std::max(1.0, hi);
      });

  // Directed and squared Ceva products equal one for cevians through a
  // common point, interior or exterior.
  ctx.run_property(
      "ceva_product", 1.0,
      [&](std::uint64_t i, std::array<Vec2, 3>& verts) {
        const Triangle tri = random_nonnull_triangle(config, kStreamCeva + i,
                                                     &ctx.stats);
        verts = verts_of(tri);
        TrialRng rng(config.seed, kStreamCeva + kPointSubstream + i);
        for (long attempt = 0; attempt < kMaxRejections; ++attempt) {
          Vec2 p;
          if ((i & 1) == 0) {
            // interior: positive barycentric weights
            double u = rng.uniform(0.05, 0.9);
            double v = rng.uniform(0.05, 0.95 - u);
            p = tri.A * u + tri.B * v + tri.C * (1.0 - u - v);
          } else {
            p = {rng.uniform(-2.0 * config.scale, 2.0 * config.scale),
                 rng.uniform(-2.0 * config.scale, 2.0 * config.scale)};
          }
          try {
            const CevianFoot d = cevian_foot(tri, VertexId::A, p - tri.A);
            const CevianFoot e = cevian_foot(tri, VertexId::B, p - tri.B);
            const CevianFoot f = cevian_foot(tri, VertexId::C, p - tri.C);
            const CevaProduct cp = ceva_product(lor, tri, d, e, f);
            return std::max(std::abs(cp.directed - 1.0),
                            std::abs(cp.squared - 1.0));
          } catch (const GeometryError&) {
            ++ctx.stats.point_rejections;
          }
        }
        throw GeometryError(Errc::generator_exhausted,
                            "ceva_product: rejection bound exceeded");
      });

  // Converse: feet with directed product one give concurrent cevians.
  ctx.run_property(
      "ceva_converse", 1.0,
      [&](std::uint64_t i, std::array<Vec2, 3>& verts) {
        const Triangle tri = random_nonnull_triangle(
            config, kStreamCevaConverse + i, &ctx.stats);
        verts = verts_of(tri);
        TrialRng rng(config.seed, kStreamCevaConverse + kPointSubstream + i);
        auto pick = [&] {
          double t;
          do {
            t = rng.uniform(-1.5, 2.5);
          } while (std::abs(t) < 0.05 || std::abs(1.0 - t) < 0.05);
          return t;
        };
        const double td = pick();
        const double te = pick();
        // solve the third directed ratio so the product is one
        const double rf = (1.0 - td) * (1.0 - te) / (td * te);
        const double tf = rf / (1.0 + rf);
        const Vec2 d = tri.B + td * (tri.C - tri.B);
        const Vec2 e = tri.C + te * (tri.A - tri.C);
        const Vec2 f = tri.A + tf * (tri.B - tri.A);
        const LineHit hit =
            intersect_lines(tri.A, d - tri.A, tri.B, e - tri.B);
        return euclidean_point_line_distance(hit.point, tri.C, f - tri.C) /
               std::max(1.0, tri.scale());
      });

  // Product identity for a random isogonal cevian pair at each vertex.
  ctx.run_property(
      "isogonal_product_identity", 10.0,
      [&](std::uint64_t i, std::array<Vec2, 3>& verts) {
        const Triangle tri = random_pure_triangle(
            config, kStreamLemma + i, ctx.character_for(i), &ctx.stats);
        verts = verts_of(tri);
        TrialRng rng(config.seed, kStreamLemma + kPointSubstream + i);
        double res = 0.0;
        for (VertexId v : {VertexId::A, VertexId::B, VertexId::C}) {
          for (long attempt = 0;; ++attempt) {
            if (attempt >= kMaxRejections)
              throw GeometryError(Errc::generator_exhausted,
                                  "isogonal_product_identity: rejection "
                                  "bound exceeded");
            const auto [p0, p1] = tri.opposite_side(v);
            double t;
            do {
              t = rng.uniform(-1.0, 2.0);
            } while (std::abs(t) < 0.05 || std::abs(1.0 - t) < 0.05);
            const Vec2 d = p0 + t * (p1 - p0) - tri.vertex(v);
            try {
              const Vec2 e = isogonal_direction(lor, tri, v, d);
              const CevianFoot fd = cevian_foot(tri, v, d);
              const CevianFoot fe = cevian_foot(tri, v, e);
              res = std::max(res,
                             lemma_product_residual(lor, tri, v, fd, fe));
              break;
            } catch (const GeometryError& err) {
              if (err.code() == Errc::lightlike_cevian)
                ++ctx.stats.lightlike_cevian_rejections;
              else
                ++ctx.stats.point_rejections;
            }
          }
        }
        return res;
      });

  // Third reflected cevian passes through the conjugate.
  ctx.run_property(
      "conjugate_concurrency", 10.0,
      [&](std::uint64_t i, std::array<Vec2, 3>& verts) {
        const Triangle tri = random_pure_triangle(
            config, kStreamConjugate + i, ctx.character_for(i), &ctx.stats);
        verts = verts_of(tri);
        TrialRng rng(config.seed, kStreamConjugate + kPointSubstream + i);
        const Vec2 p = sample_conjugate_point(lor, tri, config, rng, ctx.stats);
        return conjugate_cevians(lor, tri, p).third_line_residual;
      });

  // Conjugation is an involution on admissible points.
  ctx.run_property(
      "conjugate_involution", 100.0,
      [&](std::uint64_t i, std::array<Vec2, 3>& verts) {
        const Triangle tri = random_pure_triangle(
            config, kStreamInvolution + i, ctx.character_for(i), &ctx.stats);
        verts = verts_of(tri);
        TrialRng rng(config.seed, kStreamInvolution + kPointSubstream + i);
        for (long attempt = 0; attempt < kMaxRejections; ++attempt) {
          const Vec2 p =
              sample_conjugate_point(lor, tri, config, rng, ctx.stats);
          try {
            const Vec2 q = isogonal_conjugate(lor, tri, p);
            const Vec2 back = isogonal_conjugate(lor, tri, q);
            return euclidean_norm(back - p) / std::max(1.0, tri.scale());
          } catch (const GeometryError& e) {
            if (e.code() == Errc::lightlike_cevian)
              ++ctx.stats.lightlike_cevian_rejections;
            else
              ++ctx.stats.point_rejections;
          }
        }
        throw GeometryError(Errc::generator_exhausted,
                            "conjugate_involution: rejection bound exceeded");
      });

  // The incenter is a fixed point of conjugation.
  ctx.run_property(
      "conjugate_fixed_incenter", 1.0,
      [&](std::uint64_t i, std::array<Vec2, 3>& verts) {
        const Triangle tri = random_pure_triangle(
            config, kStreamFixedPoint + i, ctx.character_for(i), &ctx.stats);
        verts = verts_of(tri);
        const Vec2 ic = incenter(lor, tri);
        return euclidean_norm(isogonal_conjugate(lor, tri, ic) - ic) /
               std::max(1.0, tri.scale());
      });

  // Euclidean mode reduces to the classical incenter.
  ctx.run_property(
      "euclidean_incenter_crosscheck", 0.1,
      [&](std::uint64_t i, std::array<Vec2, 3>& verts) {
        TrialRng rng(config.seed, kStreamEuclidean + i);
        const Triangle tri = euclidean_random_triangle(config, rng, &ctx.stats);
        verts = verts_of(tri);
        return euclidean_crosscheck(tri) / std::max(1.0, tri.scale());
      });

  SuiteReport report;
  report.config = config;
  report.properties = std::move(ctx.reports);
  report.stats = ctx.stats;
  return report;
}

}  // namespace lplane
