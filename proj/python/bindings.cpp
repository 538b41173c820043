#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pingpong/cli.hpp"
#include "pingpong/config.hpp"
#include "pingpong/json_io.hpp"
#include "pingpong/orders.hpp"
#include "pingpong/realize.hpp"
#include "pingpong/search.hpp"
#include "pingpong/surface.hpp"

namespace py = pybind11;
using namespace pingpong;

namespace {

// Documents cross the boundary as JSON text; the Python side decodes them.
Configuration parse_config(const std::string& text) { return config_from_json(Json::parse(text)); }

Layout parse_layout(const std::string& name) {
  if (name == "standard") return Layout::standard;
  if (name == "perturbed") return Layout::perturbed;
  throw std::invalid_argument("unknown layout '" + name + "'");
}

std::vector<std::string> validate_config(const std::string& cfg) {
  std::vector<std::string> out;
  for (const auto& v : validate(parse_config(cfg))) out.push_back(v.message);
  return out;
}

std::string classify_config(const std::string& cfg) { return verdict_to_json(classify(parse_config(cfg))).dump(); }

std::string canonical(const std::string& cfg) { return config_to_json(canonical_form(parse_config(cfg))).dump(); }

std::string realize(const std::string& cfg, const std::string& layout) {
  return action_to_json(standard_realization(parse_config(cfg), parse_layout(layout)).action()).dump();
}

std::string extract(const std::string& action) {
  return config_to_json(extract_config(action_from_json(Json::parse(action)))).dump();
}

int circular(const std::string& cfg, const std::string& g1, const std::string& g2, const std::string& g3,
             const std::string& layout) {
  const Realization r = standard_realization(parse_config(cfg), parse_layout(layout));
  const int n = r.config().rank;
  return to_int(circular_order(r, Word::parse(n, g1), Word::parse(n, g2), Word::parse(n, g3)));
}

int linear(const std::string& cfg, const std::string& u, const std::string& v, const std::string& layout) {
  const Realization r = standard_realization(parse_config(cfg), parse_layout(layout));
  const int n = r.config().rank;
  return linear_compare(r, CentralElement::parse(n, u), CentralElement::parse(n, v));
}

std::string run_survey(int rank, std::optional<int> max_k, std::optional<int> bound, std::uint64_t ceiling) {
  SurveyReport report;
  {
    py::gil_scoped_release release;
    report = survey({rank, max_k, bound}, ceiling, false);
  }
  return report_to_json(report).dump();
}

py::tuple cli(const std::vector<std::string>& args) {
  const CommandResult res = run_cli(args);
  return py::make_tuple(res.exit_code, res.out, res.err);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ping-pong configurations of free groups acting on the circle";

  py::register_exception<InvalidConfiguration>(m, "InvalidConfiguration", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<ExtractionError>(m, "ExtractionError", PyExc_ValueError);
  py::register_exception<BoundTooLarge>(m, "BoundTooLarge", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("validate", &validate_config, py::arg("config"), "Violation messages; empty when valid.");
  m.def("classify", &classify_config, py::arg("config"));
  m.def("canonical_form", &canonical, py::arg("config"));
  m.def("realize", &realize, py::arg("config"), py::arg("layout") = "standard");
  m.def("extract", &extract, py::arg("action"));
  m.def("circular_order", &circular, py::arg("config"), py::arg("g1"), py::arg("g2"), py::arg("g3"),
        py::arg("layout") = "standard");
  m.def("linear_compare", &linear, py::arg("config"), py::arg("u"), py::arg("v"), py::arg("layout") = "standard");
  m.def("survey", &run_survey, py::arg("rank"), py::arg("max_k") = py::none(), py::arg("bound") = py::none(),
        py::arg("ceiling") = kDefaultCeiling);
  m.def("run_cli", &cli, py::arg("args"), "Runs a command line; returns (exit_code, stdout, stderr).");
}
