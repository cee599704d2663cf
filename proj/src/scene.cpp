#include "lplane/scene.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lplane/bisector.hpp"
#include "lplane/isogonal.hpp"

namespace lplane {

namespace {

using nlohmann::json;

Vec2 parse_vec(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw GeometryError(Errc::parse_error,
                        what + ": expected [x, t] with two numbers");
  const Vec2 v{j[0].get<double>(), j[1].get<double>()};
  if (!finite(v))
    throw GeometryError(Errc::parse_error, what + ": non-finite coordinate");
  return v;
}

json vec_json(Vec2 v) { return json::array({v.x, v.t}); }

json error_json(const std::string& where, const GeometryError& e) {
  return {{"where", where}, {"code", errc_name(e.code())},
          {"message", e.what()}};
}

json foot_json(const CevianFoot& f) {
  return {{"point", vec_json(f.point)}, {"param", f.param}};
}

}  // namespace

Scene parse_scene(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GeometryError(Errc::parse_error, e.what());
  }
  if (!j.is_object())
    throw GeometryError(Errc::parse_error, "scene: expected a JSON object");

  Form form = Form::lorentzian();
  if (j.contains("signature")) {
    const std::string sig = j["signature"].is_string()
                                ? j["signature"].get<std::string>()
                                : std::string();
    if (sig == "euclidean")
      form = Form::euclidean();
    else if (sig == "lorentzian")
      form = Form::lorentzian();
    else
      throw GeometryError(Errc::parse_error,
                          "signature: expected \"euclidean\" or \"lorentzian\"");
  }

  if (!j.contains("triangle") || !j["triangle"].is_object())
    throw GeometryError(Errc::parse_error, "scene: missing triangle object");
  const json& t = j["triangle"];
  for (const char* k : {"A", "B", "C"})
    if (!t.contains(k))
      throw GeometryError(Errc::parse_error,
                          std::string("triangle: missing vertex ") + k);

  // Triangle construction throws Degenerate for collinear vertices.
  Scene scene{form,
              Triangle(parse_vec(t["A"], "vertex A"),
                       parse_vec(t["B"], "vertex B"),
                       parse_vec(t["C"], "vertex C")),
              std::nullopt,
              {}};

  if (j.contains("point") && !j["point"].is_null())
    scene.point = parse_vec(j["point"], "point");

  if (j.contains("render")) {
    const json& r = j["render"];
    if (!r.is_object())
      throw GeometryError(Errc::parse_error, "render: expected an object");
    if (r.contains("width")) scene.render.width = r["width"].get<int>();
    if (r.contains("height")) scene.render.height = r["height"].get<int>();
    if (r.contains("samples")) scene.render.samples = r["samples"].get<int>();
    if (r.contains("margin")) scene.render.margin = r["margin"].get<double>();
    if (scene.render.width < 16 || scene.render.height < 16 ||
        scene.render.samples < 2)
      throw GeometryError(Errc::parse_error, "render: invalid options");
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw GeometryError(Errc::parse_error, "cannot open scene file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

json analyze_scene(const Scene& scene, double tol) {
  const Form form = scene.form;
  const Triangle& tri = scene.triangle;
  json out;
  json errors = json::array();

  out["signature"] = form.is_lorentzian() ? "lorentzian" : "euclidean";
  out["triangle"] = {{"A", vec_json(tri.A)},
                     {"B", vec_json(tri.B)},
                     {"C", vec_json(tri.C)}};
  out["edges"] = {{"a", vec_json(tri.edge_a())},
                  {"b", vec_json(tri.edge_b())},
                  {"c", vec_json(tri.edge_c())}};
  const TriangleClass cls = classify(form, tri);
  out["classification"] = triangle_class_name(cls);
  {
    json chars;
    const char* names[3] = {"a", "b", "c"};
    const Vec2 edges[3] = {tri.edge_a(), tri.edge_b(), tri.edge_c()};
    for (int i = 0; i < 3; ++i)
      chars[names[i]] = causal_character_name(causal_character(form, edges[i]));
    out["edge_characters"] = chars;
  }
  out["centroid"] = vec_json(centroid(tri));

  json bisectors;
  std::array<std::optional<CevianFoot>, 3> feet;
  const std::array<VertexId, 3> ids = {VertexId::A, VertexId::B, VertexId::C};
  for (int i = 0; i < 3; ++i) {
    try {
      const BisectorCevian cev = angle_bisector_cevian(form, tri, ids[i]);
      feet[i] = cev.foot;
      bisectors[vertex_name(ids[i])] = {{"direction", vec_json(cev.direction)},
                                        {"foot", foot_json(cev.foot)}};
    } catch (const GeometryError& e) {
      errors.push_back(
          error_json(std::string("bisector.") + vertex_name(ids[i]), e));
    }
  }
  out["bisectors"] = bisectors;

  json residuals;
  try {
    residuals["law_of_sines"] = law_of_sines_residual(form, tri);
  } catch (const GeometryError& e) {
    errors.push_back(error_json("residuals.law_of_sines", e));
  }
  {
    json bt;
    for (VertexId v : ids) {
      try {
        bt[vertex_name(v)] = bisector_theorem_residual(form, tri, v);
      } catch (const GeometryError& e) {
        errors.push_back(error_json(
            std::string("residuals.bisector_theorem.") + vertex_name(v), e));
      }
    }
    residuals["bisector_theorem"] = bt;
  }
  if (feet[0] && feet[1] && feet[2]) {
    try {
      const CevaProduct cp =
          ceva_product(form, tri, *feet[0], *feet[1], *feet[2], tol);
      residuals["ceva_bisector_squared"] = std::abs(cp.squared - 1.0);
    } catch (const GeometryError& e) {
      errors.push_back(error_json("residuals.ceva_bisector_squared", e));
    }
  }
  try {
    residuals["incenter_concurrency"] = incenter_concurrency_residual(form, tri);
  } catch (const GeometryError& e) {
    errors.push_back(error_json("residuals.incenter_concurrency", e));
  }
  out["residuals"] = residuals;

  try {
    out["incenter"] = vec_json(incenter(form, tri));
    const auto d = incenter_side_distances(form, tri);
    out["side_distances"] = json::array({d[0], d[1], d[2]});
    const Circle circ = incircle(form, tri);
    out["inradius"] = circ.radius;
    out["incircle"] = {{"center", vec_json(circ.center)},
                       {"radius", circ.radius},
                       {"sigma", circ.sigma}};
  } catch (const GeometryError& e) {
    errors.push_back(error_json("incenter", e));
  }

  try {
    out["lemoine_point"] = vec_json(lemoine_point(form, tri));
  } catch (const GeometryError& e) {
    errors.push_back(error_json("lemoine_point", e));
  }

  if (scene.point) {
    out["point"] = vec_json(*scene.point);
    try {
      out["isogonal_conjugate"] =
          vec_json(isogonal_conjugate(form, tri, *scene.point));
    } catch (const GeometryError& e) {
      errors.push_back(error_json("isogonal_conjugate", e));
    }
  }

  out["errors"] = errors;
  return out;
}

json conjugate_report(const Scene& scene, double tol) {
  json out;
  json errors = json::array();
  out["signature"] = scene.form.is_lorentzian() ? "lorentzian" : "euclidean";
  if (!scene.point) {
    throw GeometryError(Errc::parse_error,
                        "conjugate: scene has no \"point\" field");
  }
  out["point"] = vec_json(*scene.point);
  try {
    const ConjugateTrace trace =
        conjugate_cevians(scene.form, scene.triangle, *scene.point, tol);
    const char* names[3] = {"D", "E", "F"};
    const char* rnames[3] = {"D_prime", "E_prime", "F_prime"};
    json feet, rfeet;
    for (int i = 0; i < 3; ++i) {
      feet[names[i]] = foot_json(trace.feet[i]);
      rfeet[rnames[i]] = foot_json(trace.reflected_feet[i]);
    }
    out["feet"] = feet;
    out["reflected_feet"] = rfeet;
    out["conjugate"] = vec_json(trace.conjugate);
    out["third_line_residual"] = trace.third_line_residual;
  } catch (const GeometryError& e) {
    errors.push_back(error_json("conjugate", e));
  }
  out["errors"] = errors;
  return out;
}

json to_json(const SuiteReport& report) {
  json cfg = {{"seed", report.config.seed},
              {"trials", report.config.trials},
              {"character", character_filter_name(report.config.character)},
              {"scale", report.config.scale},
              {"tol", report.config.tol},
              {"lightcone_margin", report.config.lightcone_margin},
              {"unsquared_sine", report.config.unsquared_sine}};
  json props = json::array();
  for (const auto& p : report.properties) {
    json failures = json::array();
    for (const auto& f : p.failures)
      failures.push_back({{"index", f.index},
                          {"vertices", json::array({vec_json(f.vertices[0]),
                                                    vec_json(f.vertices[1]),
                                                    vec_json(f.vertices[2])})},
                          {"residual", f.residual}});
    props.push_back({{"name", p.name},
                     {"trials", p.trials},
                     {"tol", p.tol},
                     {"max_residual", p.max_residual},
                     {"passed", p.passed()},
                     {"failures", failures}});
  }
  return {{"config", cfg},
          {"properties", props},
          {"generator", {{"triangle_rejections", report.stats.triangle_rejections},
                         {"point_rejections", report.stats.point_rejections},
                         {"lightlike_cevian_rejections",
                          report.stats.lightlike_cevian_rejections}}},
          {"passed", report.passed()}};
}

// ---------------------------------------------------------------------------
// SVG rendering

namespace {

struct Viewport {
  double wx0, wt0, wx1, wt1;  // world box
  int width, height;
  double sc, ox, ot;

  Viewport(const Scene& scene) {
    const Triangle& tri = scene.triangle;
    wx0 = std::min({tri.A.x, tri.B.x, tri.C.x});
    wx1 = std::max({tri.A.x, tri.B.x, tri.C.x});
    wt0 = std::min({tri.A.t, tri.B.t, tri.C.t});
    wt1 = std::max({tri.A.t, tri.B.t, tri.C.t});
    if (scene.point) {
      wx0 = std::min(wx0, scene.point->x);
      wx1 = std::max(wx1, scene.point->x);
      wt0 = std::min(wt0, scene.point->t);
      wt1 = std::max(wt1, scene.point->t);
    }
    const double m =
        scene.render.margin * std::max(wx1 - wx0, wt1 - wt0);
    wx0 -= m; wx1 += m; wt0 -= m; wt1 += m;
    width = scene.render.width;
    height = scene.render.height;
    sc = std::min(width / (wx1 - wx0), height / (wt1 - wt0));
    ox = 0.5 * (width - sc * (wx1 + wx0));
    // t axis points up
    ot = 0.5 * (height + sc * (wt1 + wt0));
  }

  double px(Vec2 w) const { return ox + sc * w.x; }
  double pt(Vec2 w) const { return ot - sc * w.t; }

  double extent() const { return std::max(wx1 - wx0, wt1 - wt0); }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

void line(std::ostringstream& svg, const Viewport& vp, Vec2 a, Vec2 b,
          const std::string& style) {
  svg << "<line x1=\"" << num(vp.px(a)) << "\" y1=\"" << num(vp.pt(a))
      << "\" x2=\"" << num(vp.px(b)) << "\" y2=\"" << num(vp.pt(b)) << "\" "
      << style << "/>\n";
}

void dot(std::ostringstream& svg, const Viewport& vp, Vec2 p,
         const std::string& fill, const std::string& label) {
  svg << "<circle cx=\"" << num(vp.px(p)) << "\" cy=\"" << num(vp.pt(p))
      << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
  if (!label.empty())
    svg << "<text x=\"" << num(vp.px(p) + 6) << "\" y=\""
        << num(vp.pt(p) - 6) << "\" font-size=\"13\" fill=\"" << fill
        << "\">" << label << "</text>\n";
}

void polyline(std::ostringstream& svg, const Viewport& vp,
              const std::vector<Vec2>& pts, const std::string& style) {
  svg << "<polyline points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) svg << ' ';
    svg << num(vp.px(pts[i])) << ',' << num(vp.pt(pts[i]));
  }
  svg << "\" " << style << "/>\n";
}

// Both branches of the Lorentzian incircle, sampled parametrically.
void draw_circle(std::ostringstream& svg, const Viewport& vp,
                 const Circle& circ, bool lorentzian, int samples,
                 const std::string& style) {
  std::vector<Vec2> branch;
  branch.reserve(samples + 1);
  if (!lorentzian) {
    for (int i = 0; i <= samples; ++i) {
      const double a = 2.0 * M_PI * i / samples;
      branch.push_back(circ.center +
                       circ.radius * Vec2{std::cos(a), std::sin(a)});
    }
    polyline(svg, vp, branch, style);
    return;
  }
  const double span = std::max(2.0, 2.0 * vp.extent() / circ.radius);
  const double S = std::acosh(span);
  for (int half : {+1, -1}) {
    branch.clear();
    for (int i = 0; i <= samples; ++i) {
      const double s = -S + 2.0 * S * i / samples;
      const Vec2 off = circ.sigma > 0 ? Vec2{std::cosh(s), std::sinh(s)}
                                      : Vec2{std::sinh(s), std::cosh(s)};
      branch.push_back(circ.center + (half * circ.radius) * off);
    }
    polyline(svg, vp, branch, style);
  }
}

}  // namespace

std::string render_svg(const Scene& scene) {
  const Form form = scene.form;
  const Triangle& tri = scene.triangle;
  const Viewport vp(scene);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << vp.width
      << "\" height=\"" << vp.height << "\" viewBox=\"0 0 " << vp.width << ' '
      << vp.height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const std::string edge_style = "stroke=\"black\" stroke-width=\"1.5\"";
  line(svg, vp, tri.A, tri.B, edge_style);
  line(svg, vp, tri.B, tri.C, edge_style);
  line(svg, vp, tri.C, tri.A, edge_style);
  dot(svg, vp, tri.A, "black", "A");
  dot(svg, vp, tri.B, "black", "B");
  dot(svg, vp, tri.C, "black", "C");

  const std::string bis_style = "stroke=\"#1565c0\" stroke-width=\"1\"";
  for (VertexId v : {VertexId::A, VertexId::B, VertexId::C}) {
    try {
      const BisectorCevian cev = angle_bisector_cevian(form, tri, v);
      line(svg, vp, tri.vertex(v), cev.foot.point, bis_style);
    } catch (const GeometryError& e) {
      svg << "<!-- warning: bisector " << vertex_name(v) << ": " << e.what()
          << " -->\n";
    }
  }

  try {
    const Circle circ = incircle(form, tri);
    draw_circle(svg, vp, circ, form.is_lorentzian(), scene.render.samples,
                "fill=\"none\" stroke=\"#c62828\" stroke-width=\"1.2\"");
    dot(svg, vp, circ.center, "#c62828", "I");
  } catch (const GeometryError& e) {
    svg << "<!-- warning: incircle: " << e.what() << " -->\n";
  }

  if (scene.point) {
    const Vec2 p = *scene.point;
    const std::string cev_style =
        "stroke=\"#2e7d32\" stroke-width=\"1\" stroke-dasharray=\"4 3\"";
    const std::string ref_style =
        "stroke=\"#6a1b9a\" stroke-width=\"1\" stroke-dasharray=\"2 3\"";
    try {
      const ConjugateTrace trace = conjugate_cevians(form, tri, p);
      for (int i = 0; i < 3; ++i) {
        const Vec2 v = tri.vertex(trace.feet[i].vertex);
        line(svg, vp, v, trace.feet[i].point, cev_style);
        line(svg, vp, v, trace.reflected_feet[i].point, ref_style);
      }
      dot(svg, vp, trace.conjugate, "#6a1b9a", "P'");
    } catch (const GeometryError& e) {
      svg << "<!-- warning: conjugate: " << e.what() << " -->\n";
    }
    dot(svg, vp, p, "#2e7d32", "P");
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lplane
