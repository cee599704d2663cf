#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lplane/bisector.hpp"
#include "lplane/harness.hpp"
#include "lplane/isogonal.hpp"
#include "lplane/scene.hpp"
#include "lplane/triangle.hpp"

namespace py = pybind11;
using namespace lplane;

namespace {

Vec2 to_vec(py::handle obj) {
  if (py::isinstance<Vec2>(obj)) return obj.cast<Vec2>();
  const auto seq = py::cast<py::sequence>(obj);
  if (py::len(seq) != 2) throw py::value_error("expected a pair (x, t)");
  return {seq[0].cast<double>(), seq[1].cast<double>()};
}

}  // namespace

PYBIND11_MODULE(_lplane, m) {
  m.doc() = "Signature-generic plane geometry: bisectors, incenters, "
            "isogonal conjugates in the Euclidean and Lorentzian planes";

  static py::exception<GeometryError> exc(m, "GeometryError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GeometryError& e) {
      const std::string msg =
          std::string(errc_name(e.code())) + ": " + e.what();
      PyErr_SetString(exc.ptr(), msg.c_str());
    }
  });

  py::class_<Vec2>(m, "Vec2")
      .def(py::init<double, double>(), py::arg("x"), py::arg("t"))
      .def_readwrite("x", &Vec2::x)
      .def_readwrite("t", &Vec2::t)
      .def("__add__", [](Vec2 a, Vec2 b) { return a + b; })
      .def("__sub__", [](Vec2 a, Vec2 b) { return a - b; })
      .def("__neg__", [](Vec2 a) { return -a; })
      .def("__mul__", [](Vec2 a, double s) { return a * s; })
      .def("__rmul__", [](Vec2 a, double s) { return a * s; })
      .def("__truediv__", [](Vec2 a, double s) { return a / s; })
      .def("__eq__", [](Vec2 a, Vec2 b) { return a == b; })
      .def("__iter__",
           [](Vec2 v) {
             return py::iter(py::make_tuple(v.x, v.t));
           })
      .def("__repr__", [](Vec2 v) {
        return "Vec2(" + std::to_string(v.x) + ", " + std::to_string(v.t) +
               ")";
      });

  py::class_<Form>(m, "Form")
      .def_static("euclidean", &Form::euclidean)
      .def_static("lorentzian", &Form::lorentzian)
      .def_readonly("epsilon", &Form::epsilon)
      .def("is_lorentzian", &Form::is_lorentzian)
      .def("__repr__", [](Form f) {
        return std::string("Form.") +
               (f.is_lorentzian() ? "lorentzian()" : "euclidean()");
      });

  py::enum_<CausalCharacter>(m, "CausalCharacter")
      .value("spacelike", CausalCharacter::spacelike)
      .value("timelike", CausalCharacter::timelike)
      .value("lightlike", CausalCharacter::lightlike);

  py::enum_<VertexId>(m, "VertexId")
      .value("A", VertexId::A)
      .value("B", VertexId::B)
      .value("C", VertexId::C);

  py::enum_<TriangleClass>(m, "TriangleClass")
      .value("pure_spacelike", TriangleClass::pure_spacelike)
      .value("pure_timelike", TriangleClass::pure_timelike)
      .value("mixed", TriangleClass::mixed)
      .value("has_lightlike_edge", TriangleClass::has_lightlike_edge);

  py::class_<Triangle>(m, "Triangle")
      .def(py::init([](py::handle a, py::handle b, py::handle c) {
             return Triangle(to_vec(a), to_vec(b), to_vec(c));
           }),
           py::arg("A"), py::arg("B"), py::arg("C"))
      .def_readonly("A", &Triangle::A)
      .def_readonly("B", &Triangle::B)
      .def_readonly("C", &Triangle::C)
      .def("edge_a", &Triangle::edge_a)
      .def("edge_b", &Triangle::edge_b)
      .def("edge_c", &Triangle::edge_c)
      .def("scale", &Triangle::scale);

  py::class_<CevianFoot>(m, "CevianFoot")
      .def_readonly("vertex", &CevianFoot::vertex)
      .def_readonly("point", &CevianFoot::point)
      .def_readonly("param", &CevianFoot::param);

  py::class_<Circle>(m, "Circle")
      .def_readonly("center", &Circle::center)
      .def_readonly("radius", &Circle::radius)
      .def_readonly("sigma", &Circle::sigma);

  // core
  m.def("inner", [](Form f, py::handle u, py::handle v) {
    return inner(f, to_vec(u), to_vec(v));
  });
  m.def("magnitude",
        [](Form f, py::handle v) { return magnitude(f, to_vec(v)); });
  m.def("causal_character",
        [](Form f, py::handle v, double tol) {
          return causal_character(f, to_vec(v), tol);
        },
        py::arg("form"), py::arg("v"), py::arg("tol") = 0.0);
  m.def("unit", [](Form f, py::handle v) { return unit(f, to_vec(v)); });
  m.def("rotate",
        [](double phi, py::handle v) { return rotate(phi, to_vec(v)); });
  m.def("reflect", [](Form f, py::handle mirror, py::handle v) {
    return reflect(f, to_vec(mirror), to_vec(v));
  });

  // bisector
  m.def("is_bisector",
        [](Form f, py::handle u, py::handle v, py::handle w, double tol) {
          return is_bisector(f, to_vec(u), to_vec(v), to_vec(w), tol);
        },
        py::arg("form"), py::arg("u"), py::arg("v"), py::arg("w"),
        py::arg("tol") = kDefaultTol);
  m.def("bisector_direction", [](Form f, py::handle u, py::handle v) {
    return bisector_direction(f, to_vec(u), to_vec(v));
  });
  m.def("bisecting_rotation_angle",
        [](Form f, py::handle a, py::handle b) {
          return bisecting_rotation_angle(f, to_vec(a), to_vec(b));
        });

  // triangle
  m.def("classify", &classify, py::arg("form"), py::arg("tri"),
        py::arg("char_tol") = 0.0);
  m.def("squared_sine", [](Form f, py::handle u, py::handle v) {
    return squared_sine(f, to_vec(u), to_vec(v));
  });
  m.def("law_of_sines_residual", &law_of_sines_residual, py::arg("form"),
        py::arg("tri"), py::arg("squared_numerator") = true);
  m.def("angle_bisector_cevian",
        [](Form f, const Triangle& tri, VertexId v) {
          const BisectorCevian bc = angle_bisector_cevian(f, tri, v);
          return py::make_tuple(bc.direction, bc.foot);
        });
  m.def("bisector_theorem_residual", &bisector_theorem_residual);
  m.def("incenter", &incenter);
  m.def("inradius", &inradius);
  m.def("incircle", &incircle);
  m.def("incenter_side_distances", &incenter_side_distances);

  // isogonal
  m.def("centroid", &centroid);
  m.def("isogonal_direction",
        [](Form f, const Triangle& tri, VertexId v, py::handle d) {
          return isogonal_direction(f, tri, v, to_vec(d));
        });
  m.def("isogonal_conjugate",
        [](Form f, const Triangle& tri, py::handle p) {
          return isogonal_conjugate(f, tri, to_vec(p));
        });
  m.def("lemoine_point", &lemoine_point);

  // harness and scene
  m.def("run_suite",
        [](std::uint64_t seed, int trials, const std::string& character,
           double tol, bool unsquared_sine) {
          SuiteConfig cfg;
          cfg.seed = seed;
          cfg.trials = trials;
          const auto filter = parse_character_filter(character);
          if (!filter)
            throw py::value_error("character must be spacelike, timelike, "
                                  "or both");
          cfg.character = *filter;
          cfg.tol = tol;
          cfg.unsquared_sine = unsquared_sine;
          return py::module_::import("json").attr("loads")(
              to_json(run_suite(cfg)).dump());
        },
        py::arg("seed") = 42, py::arg("trials") = 1000,
        py::arg("character") = "both", py::arg("tol") = 1e-9,
        py::arg("unsquared_sine") = false);
  m.def("analyze", [](const std::string& text) {
    return py::module_::import("json").attr("loads")(
        analyze_scene(parse_scene(text)).dump());
  });
  m.def("render_svg", [](const std::string& text) {
    return render_svg(parse_scene(text));
  });
}
