#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lplane/isogonal.hpp"
#include "lplane/triangle.hpp"

namespace lplane {

enum class CharacterFilter { spacelike, timelike, both };

const char* character_filter_name(CharacterFilter f);
std::optional<CharacterFilter> parse_character_filter(const std::string& s);

struct SuiteConfig {
  std::uint64_t seed = 42;
  int trials = 1000;
  CharacterFilter character = CharacterFilter::both;
  double scale = 10.0;          // coordinate box half-width
  double tol = 1e-9;            // base tolerance; see property multipliers
  double lightcone_margin = 0.05;  // min |e.e| / (Euclidean edge norm)^2
  bool unsquared_sine = false;  // use the uncorrected squared-sine variant
};

struct TrialFailure {
  int index;
  std::array<Vec2, 3> vertices;
  double residual;
};

struct PropertyReport {
  std::string name;
  int trials = 0;
  double tol = 0.0;
  double max_residual = 0.0;
  std::vector<TrialFailure> failures;

  bool passed() const { return failures.empty(); }
};

struct GeneratorStats {
  long triangle_rejections = 0;
  long point_rejections = 0;
  long lightlike_cevian_rejections = 0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<PropertyReport> properties;
  GeneratorStats stats;

  bool passed() const;
};

// Counter-based per-trial generator: the stream is a pure function of
// (seed, index), so trials may run in any order or concurrently without
// perturbing results.
class TrialRng {
public:
  TrialRng(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  double uniform01();                      // [0, 1)
  double uniform(double lo, double hi);
  bool coin();

private:
  std::uint64_t state_;
};

// Rejection-samples vertex triples uniform in the box until classification
// matches and every edge clears the lightcone margin. Deterministic in
// (config.seed, index).
Triangle random_pure_triangle(const SuiteConfig& config, std::uint64_t index,
                              CausalCharacter which,
                              GeneratorStats* stats = nullptr);

// Any non-degenerate triangle whose edges all clear the lightcone margin
// (pure or mixed).
Triangle random_nonnull_triangle(const SuiteConfig& config,
                                 std::uint64_t index,
                                 GeneratorStats* stats = nullptr);

// Runs every theorem-level property over `trials` generated instances.
// Failures are recorded in the report, never thrown.
SuiteReport run_suite(const SuiteConfig& config);

// Distance between incenter(T) and the classical barycentric incenter
// (|a| A + |b| B + |c| C) / (|a| + |b| + |c|); Euclidean plane only.
double euclidean_crosscheck(const Triangle& tri);

}  // namespace lplane
