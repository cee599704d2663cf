#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lplane/scene.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitParse;
  }
  out << text;
  return kExitOk;
}

int scene_error_exit(const lplane::GeometryError& e) {
  std::cerr << "error: " << lplane::errc_name(e.code()) << ": " << e.what()
            << "\n";
  return e.code() == lplane::Errc::degenerate ? kExitDegenerate : kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane-geometry kernel for the Lorentzian (Minkowski) and "
               "Euclidean planes: triangle classification, angle bisectors, "
               "incenters, isogonal conjugates, and a randomized "
               "theorem-verification suite."};
  app.require_subcommand(1);

  std::string input, output;
  double tolerance = lplane::kDefaultTol;

  auto* analyze = app.add_subcommand("analyze",
                                     "Analyze a scene file: classification, "
                                     "centers, residuals");
  analyze->add_option("--input", input, "scene JSON file")->required();
  analyze->add_option("--output", output, "report destination (default stdout)");
  analyze->add_option("--tolerance", tolerance, "relative tolerance");

  lplane::SuiteConfig cfg;
  std::string character = "both";
  auto* verify = app.add_subcommand("verify",
                                    "Run the randomized property-verification "
                                    "suite");
  verify->add_option("--seed", cfg.seed, "generator seed");
  verify->add_option("--trials", cfg.trials, "trials per property")
      ->check(CLI::PositiveNumber);
  verify->add_option("--character", character,
                     "triangle purity to sample: spacelike|timelike|both")
      ->check(CLI::IsMember({"spacelike", "timelike", "both"}));
  verify->add_option("--tolerance", cfg.tol, "base tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--scale", cfg.scale, "coordinate box half-width")
      ->check(CLI::PositiveNumber);
  verify->add_option("--lightcone-margin", cfg.lightcone_margin,
                     "minimum |e.e| relative to the squared Euclidean edge "
                     "length")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--paper-literal-s2", cfg.unsquared_sine,
                   "use the uncorrected squared-sine variant (linear "
                   "numerator); the law-of-sines property is expected to "
                   "fail");
  verify->add_option("--output", output, "report destination (default stdout)");

  auto* conjugate = app.add_subcommand("conjugate",
                                       "Isogonal conjugate of the scene's "
                                       "point: cevian feet, reflected feet, "
                                       "conjugate");
  conjugate->add_option("--input", input, "scene JSON file")->required();
  conjugate->add_option("--output", output,
                        "report destination (default stdout)");
  conjugate->add_option("--tolerance", tolerance, "relative tolerance");

  std::string svg_out;
  int samples = -1;
  auto* render = app.add_subcommand("render",
                                    "Render the scene (triangle, cevians, "
                                    "incircle hyperbola) to SVG");
  render->add_option("--input", input, "scene JSON file")->required();
  render->add_option("--output", svg_out, "SVG destination")->required();
  render->add_option("--samples", samples, "samples per hyperbola branch");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const lplane::Scene scene = lplane::load_scene(input);
      return write_output(lplane::analyze_scene(scene, tolerance).dump(2) +
                              "\n",
                          output);
    }
    if (verify->parsed()) {
      cfg.character = *lplane::parse_character_filter(character);
      const lplane::SuiteReport report = lplane::run_suite(cfg);
      const int rc = write_output(lplane::to_json(report).dump(2) + "\n",
                                  output);
      if (rc != kExitOk) return rc;
      for (const auto& p : report.properties)
        std::cerr << (p.passed() ? "pass" : "FAIL") << "  " << p.name << "  ("
                  << p.trials << " trials, max residual " << p.max_residual
                  << ", tol " << p.tol << ")\n";
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }
    if (conjugate->parsed()) {
      const lplane::Scene scene = lplane::load_scene(input);
      if (!scene.point) {
        std::cerr << "error: conjugate requires a scene with a \"point\"\n";
        return kExitParse;
      }
      return write_output(lplane::conjugate_report(scene, tolerance).dump(2) +
                              "\n",
                          output);
    }
    if (render->parsed()) {
      lplane::Scene scene = lplane::load_scene(input);
      if (samples > 1) scene.render.samples = samples;
      return write_output(lplane::render_svg(scene), svg_out);
    }
  } catch (const lplane::GeometryError& e) {
    return scene_error_exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
