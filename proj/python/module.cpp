#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gstrata/charts.hpp"
#include "gstrata/deform.hpp"
#include "gstrata/equations.hpp"
#include "gstrata/oracle.hpp"
#include "gstrata/staircase.hpp"
#include "gstrata/textio.hpp"
#include "gstrata/verify.hpp"
#include "json.hpp"

namespace py = pybind11;
using namespace gstrata;

namespace {

StandardSet make_set(int n, const std::vector<std::vector<int>>& elems) {
  std::vector<Exponent> es;
  es.reserve(elems.size());
  for (const auto& e : elems) es.push_back(e);
  return StandardSet(n, std::move(es));
}

TermOrder make_order(const StandardSet& d, const std::string& spec,
                     const std::string& vars) {
  return TermOrder::parse(spec.empty() ? "lex" : spec, d.n(), vars);
}

std::string equations_json(const StandardSet& d, const std::string& which,
                           const std::string& order_spec,
                           const std::string& vars) {
  TermOrder order = make_order(d, order_spec, vars);
  if (which == "full") return gen_full(d, d).to_json().dump();
  if (which == "fewer") return gen_fewer(d).to_json().dump();
  if (which == "stratum") return gen_stratum(d, d, order).to_json().dump();
  if (which == "minimal") return gen_minimal(d, order).to_json().dump();
  if (which == "universal")
    return (order_spec.empty() ? gen_universal(d, d, false)
                               : gen_universal(d, d, true, &order))
        .to_json()
        .dump();
  if (which == "homog")
    return gen_homogeneous_restriction(d, build_deformation(d, order).ell)
        .to_json()
        .dump();
  throw std::invalid_argument("unknown mode: " + which);
}

}  // namespace

PYBIND11_MODULE(gstrata, m) {
  m.doc() = "staircase schemes: defining equations, charts, degenerations";

  py::class_<StandardSet>(m, "StandardSet")
      .def(py::init(&make_set), py::arg("n"), py::arg("elements"))
      .def_property_readonly("n", &StandardSet::n)
      .def("__len__", &StandardSet::size)
      .def_property_readonly(
          "elements", [](const StandardSet& s) { return s.elements(); })
      .def_property_readonly("corners",
                             [](const StandardSet& s) { return s.corners(); })
      .def_property_readonly("border",
                             [](const StandardSet& s) { return s.border(); })
      .def("iterated_border", &StandardSet::iterated_border, py::arg("k"))
      .def_property_readonly(
          "edge_points", [](const StandardSet& s) { return s.edge_points(); })
      .def("to_json", [](const StandardSet& s) { return s.to_json().dump(); })
      .def("__eq__", [](const StandardSet& a,
                        const StandardSet& b) { return a == b; })
      .def("__repr__", [](const StandardSet& s) {
        std::string out = "StandardSet(n=" + std::to_string(s.n()) + ", {";
        for (size_t i = 0; i < s.elements().size(); ++i) {
          if (i) out += ",";
          out += exp_str(s.elements()[i]);
        }
        return out + "})";
      });

  m.def("enumerate_standard_sets", &enumerate_standard_sets, py::arg("n"),
        py::arg("r"));
  m.def("is_standard_set", &is_standard_set, py::arg("n"),
        py::arg("elements"));

  m.def("equations", &equations_json, py::arg("delta"), py::arg("which"),
        py::arg("order") = "", py::arg("vars") = "",
        "Equation set as a JSON string; modes full, fewer, stratum, "
        "minimal, universal, homog.");
  m.def(
      "equations_cas",
      [](const StandardSet& d, const std::string& which,
         const std::string& order_spec, const std::string& vars) {
        TermOrder order = make_order(d, order_spec, vars);
        if (which == "full") return gen_full(d, d).to_cas();
        if (which == "fewer") return gen_fewer(d).to_cas();
        if (which == "stratum") return gen_stratum(d, d, order).to_cas();
        if (which == "minimal") return gen_minimal(d, order).to_cas();
        throw std::invalid_argument("unknown mode: " + which);
      },
      py::arg("delta"), py::arg("which"), py::arg("order") = "",
      py::arg("vars") = "", "Computer-algebra script for the equation set.");

  m.def(
      "intersection_determinant",
      [](const StandardSet& d, const StandardSet& e) {
        ChartBlocks cb = chart_blocks(d, e);
        return coef_text(intersection_det(cb), *cb.tring);
      },
      py::arg("delta"), py::arg("eps"));
  m.def(
      "gluing",
      [](const StandardSet& d, const StandardSet& e) {
        return gluing_map(d, e).to_json().dump();
      },
      py::arg("delta"), py::arg("eps"),
      "Chart transition substitution as a JSON string.");

  m.def(
      "deformation",
      [](const StandardSet& d, const std::string& order_spec,
         const std::string& vars) {
        TermOrder order = make_order(d, order_spec, vars);
        DeformationData D = build_deformation(d, order);
        DeformationResult R = apply_deformation(gen_stratum(d, d, order), D);
        nlohmann::json j = R.to_json();
        j["ell"] = D.ell;
        j["weights"] = R.weights;
        return j.dump();
      },
      py::arg("delta"), py::arg("order") = "", py::arg("vars") = "",
      "Deformed stratum presentation with per-generator weights.");

  m.def(
      "classify_points",
      [](const std::string& points_json, const std::string& order_spec,
         const std::string& vars) {
        PointConfiguration P =
            PointConfiguration::from_json(nlohmann::json::parse(points_json));
        TermOrder order =
            TermOrder::parse(order_spec.empty() ? "grevlex" : order_spec,
                             P.n(), vars);
        return classify_stratum(P, order).to_json().dump();
      },
      py::arg("points"), py::arg("order") = "", py::arg("vars") = "",
      "Stratum of a rational point configuration (JSON in, JSON out).");

  m.def(
      "run_suite",
      [](const std::string& name, int max_n, int max_r, unsigned long seed) {
        SuiteReport rep = run_suite(name, max_n, max_r, seed);
        return py::make_tuple(rep.pass, rep.to_json().dump());
      },
      py::arg("name"), py::arg("max_n") = 3, py::arg("max_r") = 6,
      py::arg("seed") = 0,
      "Verification suite by name; returns (pass, report_json).");
}
