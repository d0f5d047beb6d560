// python bindings: a JSON-text API over the same parsing and report layer the
// command-line tool uses; the package __init__ wraps these in dict-level calls
#include <pybind11/pybind11.h>

#include "logres/io.hpp"

namespace py = pybind11;
using namespace logres;

namespace {

Json parseDoc(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON document: ") + e.what());
  }
}

Json idealSpecOf(const Json& doc, const std::string& idealText) {
  if (!idealText.empty()) return parseDoc(idealText);
  if (doc.is_object() && doc.contains("ideal")) return doc["ideal"];
  return Json("O_D");
}

std::string analyzeText(const std::string& doc, const std::string& verify,
                        int truncation, int dmax) {
  Curve C = parseCurve(parseDoc(doc), truncation);
  return analyzeReport(C, parseVerifyLevel(verify), dmax).dump();
}

std::string dualText(const std::string& doc, const std::string& ideal,
                     const std::string& verify, int truncation) {
  Json j = parseDoc(doc);
  Curve C = parseCurve(j, truncation);
  return dualReport(C, idealSpecOf(j, ideal), parseVerifyLevel(verify)).dump();
}

std::string poincareText(const std::string& doc, const std::string& ideal,
                         int truncation) {
  Json j = parseDoc(doc);
  Curve C = parseCurve(j, truncation);
  return poincareReport(C, idealSpecOf(j, ideal)).dump();
}

std::string strataText(const std::string& doc, int truncation, int threads) {
  StrataPlan plan = parsePlan(parseDoc(doc), truncation);
  StrataReport scan = scanStrata(plan.family, plan.points, plan.truncation, threads,
                                 plan.seeds.empty() ? nullptr : &plan.seeds);
  return strataReport(plan, scan).dump();
}

std::string markdownText(const std::string& report) {
  return renderMarkdown(parseDoc(report));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "value semigroups, dual value sets, residue modules and Poincare "
            "polynomials of reduced curve singularity germs";
  m.attr("__version__") = "0.1.0";

  // register bases first so the more specific translators run first
  py::register_exception<ComputationError>(m, "ComputationError", PyExc_RuntimeError);
  py::register_exception<TruncationError>(m, "TruncationError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

  m.def("analyze_json", &analyzeText, py::arg("doc"), py::arg("verify") = "cross-check",
        py::arg("truncation") = 0, py::arg("dmax") = 128,
        "invariants and value sets of the curve described by a JSON document");
  m.def("dual_json", &dualText, py::arg("doc"), py::arg("ideal") = "",
        py::arg("verify") = "cross-check", py::arg("truncation") = 0,
        "value set of a fractional ideal and of its dual");
  m.def("poincare_json", &poincareText, py::arg("doc"), py::arg("ideal") = "",
        py::arg("truncation") = 0,
        "Poincare polynomial of a fractional ideal and of its dual");
  m.def("strata_json", &strataText, py::arg("doc"), py::arg("truncation") = 0,
        py::arg("threads") = 1, "scan an equisingular deformation plan");
  m.def("markdown_json", &markdownText, py::arg("report"),
        "render an emitted report as markdown");
}
