#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lplane/harness.hpp"
#include "lplane/triangle.hpp"

namespace lplane {

struct RenderOptions {
  int width = 800;
  int height = 600;
  int samples = 256;   // per hyperbola branch
  double margin = 0.15;  // viewport padding, fraction of the world box
};

// Input description: a signature, a labeled triangle, an optional query
// point, and render options.
//
//   {"signature": "lorentzian",
//    "triangle": {"A": [0, 1], "B": [-2, 0], "C": [2, 0]},
//    "point": [0, 0.333],
//    "render": {"width": 800, "height": 600, "samples": 256}}
struct Scene {
  Form form = Form::lorentzian();
  Triangle triangle;
  std::optional<Vec2> point;
  RenderOptions render;
};

// Throws GeometryError(parse_error) on malformed input and
// GeometryError(degenerate) on collinear vertices.
Scene parse_scene(const std::string& text);
Scene load_scene(const std::string& path);

// Full analysis report: classification, bisector cevians, centers,
// residuals. Quantities undefined for the input appear in the "errors"
// array instead of as numbers.
nlohmann::json analyze_scene(const Scene& scene, double tol = kDefaultTol);

// Isogonal-conjugation report fragment for a scene with a point: cevian
// feet, reflected feet, and the conjugate.
nlohmann::json conjugate_report(const Scene& scene, double tol = kDefaultTol);

nlohmann::json to_json(const SuiteReport& report);

std::string render_svg(const Scene& scene);

}  // namespace lplane
