#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prag/models.hpp"
#include "prag/session.hpp"

namespace py = pybind11;

namespace {

prag::Signature make_signature(const std::vector<std::pair<std::string, int>>& preds) {
  prag::Signature sig;
  sig.preds = preds;
  return sig;
}

struct RunResult {
  prag::Formula formula;
  std::string context;
  std::vector<std::string> trace;
};

RunResult run_discourse_text(const std::string& text, const prag::Lexicon& lexicon,
                             const std::string& policy) {
  prag::SessionOptions options;
  options.policy = prag::policy_from_string(policy);
  prag::Session session(lexicon, options);
  session.process_sentences(text);
  return RunResult{session.current_formula(), session.render_context_text(),
                   prag::render(session.accumulated_trace())};
}

}  // namespace

PYBIND11_MODULE(_prag, m) {
  m.doc() = "Discourse semantics for a controlled English fragment";

  py::register_exception<prag::UnresolvedAnaphoraError>(m, "UnresolvedAnaphora");
  py::register_exception<prag::PresuppositionFailureError>(m, "PresuppositionFailure");
  py::register_exception<prag::PragError>(m, "PragError");

  py::class_<prag::Term>(m, "Term")
      .def_static("var", &prag::Term::var, py::arg("name"))
      .def_static("constant", &prag::Term::constant, py::arg("name"))
      .def_property_readonly("name", &prag::Term::name)
      .def_property_readonly("is_var", &prag::Term::is_var)
      .def("__repr__", [](const prag::Term& t) { return t.name(); })
      .def("__eq__", [](const prag::Term& a, const prag::Term& b) { return a == b; });

  py::class_<prag::Formula>(m, "Formula")
      .def("__str__", [](const prag::Formula& f) { return prag::pretty(f); })
      .def("__repr__", [](const prag::Formula& f) { return prag::pretty(f); })
      .def("__eq__", [](const prag::Formula& a, const prag::Formula& b) { return a == b; })
      .def("alpha_eq", [](const prag::Formula& a, const prag::Formula& b) { return prag::alpha_eq(a, b); })
      .def("free_vars", [](const prag::Formula& f) { return prag::free_vars(f); });

  m.def("parse_formula", &prag::parse_formula, py::arg("text"));
  m.def("pretty", py::overload_cast<const prag::Formula&>(&prag::pretty), py::arg("formula"));
  m.def(
      "substitute",
      [](const prag::Formula& f, const std::string& v, const prag::Term& t) {
        return prag::substitute(f, v, t);
      },
      py::arg("formula"), py::arg("var"), py::arg("term"));

  py::class_<prag::Model>(m, "Model")
      .def("__str__", [](const prag::Model& m_) { return prag::pretty(m_); })
      .def_readonly("domain", &prag::Model::domain);

  m.def("parse_model", &prag::parse_model, py::arg("text"));
  m.def(
      "eval_formula",
      [](const prag::Model& model, const prag::Formula& f, const prag::Assignment& g) {
        return prag::eval(model, g, f);
      },
      py::arg("model"), py::arg("formula"), py::arg("assignment") = prag::Assignment{});

  py::class_<prag::EquivalenceResult>(m, "EquivalenceResult")
      .def_readonly("equivalent", &prag::EquivalenceResult::equivalent)
      .def_property_readonly("countermodel",
                             [](const prag::EquivalenceResult& r) -> py::object {
                               if (!r.countermodel) return py::none();
                               return py::cast(*r.countermodel);
                             })
      .def("__bool__", [](const prag::EquivalenceResult& r) { return r.equivalent; });

  m.def(
      "equivalent_up_to",
      [](const prag::Formula& f, const prag::Formula& g,
         const std::vector<std::pair<std::string, int>>& signature, int max_size) {
        return prag::equivalent_up_to(f, g, make_signature(signature), max_size);
      },
      py::arg("f"), py::arg("g"), py::arg("signature"), py::arg("max_size"));

  py::class_<prag::Lexicon>(m, "Lexicon").def_property_readonly("size", &prag::Lexicon::size);
  m.def("load_lexicon", &prag::load_lexicon, py::arg("text"));

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("formula", &RunResult::formula)
      .def_readonly("context", &RunResult::context)
      .def_readonly("trace", &RunResult::trace);

  m.def("run_discourse", &run_discourse_text, py::arg("text"), py::arg("lexicon"),
        py::arg("policy") = "global");

  py::class_<prag::Session>(m, "Session")
      .def(py::init([](const prag::Lexicon& lexicon, const std::string& policy, bool trace) {
             prag::SessionOptions options;
             options.policy = prag::policy_from_string(policy);
             options.trace = trace;
             return prag::Session(lexicon, options);
           }),
           py::arg("lexicon"), py::arg("policy") = "global", py::arg("trace") = false)
      .def("step", &prag::Session::step, py::arg("line"))
      .def("context_text", &prag::Session::render_context_text)
      .def("formula", &prag::Session::current_formula);
}
