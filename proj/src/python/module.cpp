#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "afscope/error.hpp"
#include "afscope/formats.hpp"
#include "afscope/json_output.hpp"
#include "afscope/views.hpp"

namespace py = pybind11;
using namespace afscope;

namespace {

Format format_arg(const std::string& name) {
  auto f = format_from_name(name);
  if (!f) throw InvalidInput("unknown format '" + name + "' (apx|tgf|json)");
  return *f;
}

Semantics semantics_arg(const std::string& name) {
  auto s = semantics_from_string(name);
  if (!s) throw InvalidInput("unknown semantics '" + name + "'");
  return *s;
}

ExplainOptions explain_options(const std::string& semantics, const std::string& candidates,
                               std::size_t max_delta, std::size_t max_tests,
                               std::size_t max_results) {
  ExplainOptions opts;
  opts.semantics = semantics_arg(semantics);
  auto mode = candidate_mode_from_string(candidates);
  if (!mode) throw InvalidInput("candidates must be failing or all-undec");
  opts.candidates = *mode;
  opts.bounds = {max_delta, max_tests, max_results};
  return opts;
}

std::vector<AttackIndex> edges_arg(const Framework& fw,
                                   const std::vector<std::pair<std::string, std::string>>& edges) {
  return resolve_attacks(fw, edges);
}

View selected_view(const Framework& fw, std::optional<std::size_t> solution,
                   std::optional<std::size_t> delta, const std::string& semantics) {
  if (!solution) {
    if (delta) throw InvalidInput("delta requires solution");
    return base_view(fw);
  }
  ExplainOptions opts;
  opts.semantics = semantics_arg(semantics);
  if (!delta) {
    Explanation e;
    e.solution_index = *solution;
    e.overlay = build_overlay(grounded(fw), afscope::solution(fw, opts.semantics, *solution));
    return solution_view(fw, e, std::nullopt);
  }
  return solution_view(fw, explain(fw, *solution, opts), delta);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of afscope";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto parse_error = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<LimitError>(m, "LimitError", parse_error.ptr());
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<OutOfRange>(m, "OutOfRange", PyExc_IndexError);
  py::register_exception<Cancelled>(m, "Cancelled", error.ptr());

  py::class_<Framework>(m, "Framework")
      .def_property_readonly("arguments",
                             [](const Framework& fw) {
                               std::vector<std::string> ids;
                               for (const auto& a : fw.arguments()) ids.push_back(a.id);
                               return ids;
                             })
      .def_property_readonly("attacks",
                             [](const Framework& fw) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (auto [s, t] : fw.attacks()) out.emplace_back(fw.id(s), fw.id(t));
                               return out;
                             })
      .def("__len__", &Framework::size)
      .def("__eq__", [](const Framework& a, const Framework& b) { return a == b; })
      .def("__repr__", [](const Framework& fw) {
        return "<Framework " + std::to_string(fw.size()) + " arguments, " +
               std::to_string(fw.attacks().size()) + " attacks>";
      });

  m.def("parse", [](const std::string& text, const std::string& format) {
    return parse(text, format_arg(format));
  }, py::arg("text"), py::arg("format"));
  m.def("serialize", [](const Framework& fw, const std::string& format) {
    return serialize(fw, format_arg(format));
  }, py::arg("framework"), py::arg("format"));

  m.def("grounded_json", [](const Framework& fw) {
    return json::dump(json::grounded(fw, grounded(fw)));
  });
  m.def("solutions_json", [](const Framework& fw, const std::string& semantics,
                             std::size_t max_solutions) {
    py::gil_scoped_release release;
    return json::dump(json::solutions(fw, enumerate(fw, semantics_arg(semantics), {max_solutions})));
  }, py::arg("framework"), py::arg("semantics"), py::arg("max_solutions") = 10'000);
  m.def("classification_json", [](const Framework& fw) {
    auto g = grounded(fw);
    return json::dump(json::classification(fw, classify_edges(fw, g.labelling, g.lengths)));
  });
  m.def("explanation_json",
        [](const Framework& fw, std::size_t index, const std::string& semantics,
           const std::string& candidates, std::size_t max_delta, std::size_t max_tests,
           std::size_t max_results) {
          auto opts = explain_options(semantics, candidates, max_delta, max_tests, max_results);
          py::gil_scoped_release release;
          return json::dump(json::explanation(fw, explain(fw, index, opts)));
        },
        py::arg("framework"), py::arg("index"), py::arg("semantics") = "stable",
        py::arg("candidates") = "failing", py::arg("max_delta") = SearchBounds{}.max_cardinality,
        py::arg("max_tests") = SearchBounds{}.max_tests,
        py::arg("max_results") = SearchBounds{}.max_results);
  m.def("what_if_json",
        [](const Framework& fw, const std::vector<std::pair<std::string, std::string>>& suspend) {
          return what_if_view(fw, edges_arg(fw, suspend)).layout_json(fw);
        },
        py::arg("framework"), py::arg("suspend"));
  m.def("layout_json",
        [](const Framework& fw, std::optional<std::size_t> solution,
           std::optional<std::size_t> delta, const std::string& semantics) {
          return selected_view(fw, solution, delta, semantics).layout_json(fw);
        },
        py::arg("framework"), py::arg("solution") = py::none(), py::arg("delta") = py::none(),
        py::arg("semantics") = "stable");
  m.def("dot",
        [](const Framework& fw, std::optional<std::size_t> solution,
           std::optional<std::size_t> delta, const std::string& semantics) {
          return selected_view(fw, solution, delta, semantics).dot(fw);
        },
        py::arg("framework"), py::arg("solution") = py::none(), py::arg("delta") = py::none(),
        py::arg("semantics") = "stable");
}
