#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trigroup/campaign.hpp"
#include "trigroup/expr.hpp"
#include "trigroup/json_io.hpp"
#include "trigroup/svg.hpp"
#include "trigroup/triangle_group.hpp"

namespace py = pybind11;
using namespace trigroup;

namespace {

const ReferenceFrame& default_frame() {
  static const ReferenceFrame frame = ReferenceFrame::standard();
  return frame;
}

TriangleElement element_from_strings(const std::vector<std::string>& delta) {
  if (delta.size() != 3) throw py::value_error("delta must have three entries");
  return TriangleElement(Rational::parse(delta[0]), Rational::parse(delta[1]),
                         Rational::parse(delta[2]));
}

std::vector<std::string> delta_strings(const TriangleElement& t) {
  return {t.delta()[0].str(), t.delta()[1].str(), t.delta()[2].str()};
}

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::vector<std::string>> triangle_vertices(const TriangleElement& t) {
  const GeometricTriangle tri = triangle_from_bary(t, default_frame());
  std::vector<std::vector<std::string>> out;
  for (const HomPoint& v : tri.v)
    out.push_back({v[0].str(), v[1].str(), v[2].str()});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact projective configuration theorems and the additive group of triangles";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  auto geom_err = py::register_exception<GeometryError>(m, "GeometryError", PyExc_RuntimeError);
  py::register_exception<DegenerateConstruction>(m, "DegenerateConstructionError",
                                                 geom_err.ptr());
  py::register_exception<Unsupported>(m, "UnsupportedError", geom_err.ptr());

  py::enum_<TriangleKind>(m, "TriangleKind")
      .value("GEOMETRIC", TriangleKind::Geometric)
      .value("PSEUDO", TriangleKind::Pseudo)
      .value("COMPLETELY_PSEUDO", TriangleKind::CompletelyPseudo);

  py::class_<TriangleElement>(m, "TriangleElement")
      .def(py::init(&element_from_strings), py::arg("delta"),
           "Element from three exact rational strings, e.g. ['1', '-2/3', '0'].")
      .def_property_readonly("kind", &TriangleElement::kind)
      .def_property_readonly("kind_name", [](const TriangleElement& t) {
        return kind_name(t.kind());
      })
      .def_property_readonly("delta", &delta_strings)
      .def_property_readonly("is_geometric", &TriangleElement::is_geometric)
      .def("__eq__", [](const TriangleElement& a, const TriangleElement& b) { return a == b; })
      .def("__repr__", [](const TriangleElement& t) { return "TriangleElement" + t.str(); });

  m.def("zero", &TriangleElement::zero, "The neutral element (0, 0, 0).");
  m.def("completely_pseudo", &TriangleElement::completely_pseudo, py::arg("slot"),
        "The distinguished zero-sum element with -2/3 in the given slot.");

  m.def("presum", &presum_coords, py::arg("x"), py::arg("y"),
        "Coordinate pre-sum: componentwise -(x + y).");
  m.def(
      "presum_geometric",
      [](const TriangleElement& x, const TriangleElement& y) {
        return presum_geometric(x, y, default_frame());
      },
      py::arg("x"), py::arg("y"),
      "Pre-sum through the axis-model construction, including the degenerate-case rules.");
  m.def("add", &sum, py::arg("x"), py::arg("y"), "Group sum: componentwise x + y.");
  m.def("sum_with_fixed", &sum_with_fixed, py::arg("f"), py::arg("x"), py::arg("y"));
  m.def("reflect_mass_center", &reflect_mass_center, py::arg("x"));
  m.def(
      "half",
      [](const TriangleElement& a) { return half(a, default_frame()); }, py::arg("a"),
      "The element h with presum(h, h) == a, from the harmonic construction.");
  m.def(
      "pseudo_vertices",
      [](const TriangleElement& p) {
        std::vector<std::vector<std::string>> out;
        for (const Direction& d : pseudo_vertices(p))
          out.push_back({d.y[0].str(), d.y[1].str(), d.y[2].str()});
        return out;
      },
      py::arg("p"), "Ordered direction triples of a pseudo element's vertices.");
  m.def(
      "pseudo_parameterize",
      [](const TriangleElement& p) {
        const GeometricTriangle t = pseudo_parameterize(p, default_frame());
        std::vector<std::vector<std::string>> out;
        for (const HomPoint& v : t.v) out.push_back({v[0].str(), v[1].str(), v[2].str()});
        return out;
      },
      py::arg("p"), "Vertices of the unique parameterizing triangle of a zero-sum element.");
  m.def(
      "pseudo_presum_via_lemma",
      [](const TriangleElement& x, const TriangleElement& y) {
        return pseudo_presum_via_lemma(x, y, default_frame());
      },
      py::arg("x"), py::arg("y"));
  m.def("realize", &triangle_vertices, py::arg("x"),
        "Homogeneous vertex coordinates of a geometric element in the standard frame.");

  m.def(
      "eval_expression",
      [](const std::string& expr, const py::dict& inputs, bool geometric) {
        std::map<std::string, TriangleElement> named;
        for (const auto& [key, value] : inputs)
          named.emplace(py::cast<std::string>(key),
                        element_from_strings(py::cast<std::vector<std::string>>(value)));
        EvalOptions opts;
        opts.geometric = geometric;
        return eval_expression(expr, named, opts);
      },
      py::arg("expr"), py::arg("inputs"), py::arg("geometric") = false,
      "Evaluate triangle arithmetic ('#', '+', unary '-', half) over named elements.");

  m.def("theorems", [] { return theorem_names(); }, "Names accepted by verify().");
  m.def(
      "verify",
      [](const std::string& theorem, int trials, std::uint64_t seed, int jobs) {
        const auto th = theorem_from_name(theorem);
        if (!th) throw py::value_error("unknown theorem '" + theorem + "'");
        CampaignSpec spec;
        spec.theorem = *th;
        spec.trials = trials;
        spec.seed = seed;
        spec.jobs = jobs;
        return json_to_py(run_campaign(spec).to_json());
      },
      py::arg("theorem"), py::arg("trials") = 100, py::arg("seed") = 0, py::arg("jobs") = 1,
      "Run a seeded verification campaign and return the report as a dict.");

  m.def("figures", [] { return figure_names(); }, "Names accepted by figure().");
  m.def(
      "figure",
      [](const std::string& name) {
        const auto fig = figure_from_name(name);
        if (!fig) throw py::value_error("unknown figure '" + name + "'");
        const FigureResult res = emit_figure(*fig);
        if (res.degraded) throw DegenerateConstruction(res.warning);
        return res.svg;
      },
      py::arg("name"), "Render a named figure as an SVG document.");
}
