#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monoidvar/report.hpp"

namespace py = pybind11;
using namespace monoidvar;

namespace {

// Results cross the boundary as JSON text; the Python side decodes them.
std::string dumped(const report::json& j) { return j.dump(); }

CriterionResult run_criterion(const std::string& which, const Identity& id, std::size_t n) {
  if (which == "F") return criterion_F(id);
  if (which == "Q") return criterion_Q(id);
  if (which == "SL") return criterion_SL(id);
  if (which == "trivial") return criterion_trivial(id);
  if (which == "comm") return criterion_commutative_aperiodic(id, n);
  throw py::value_error("unknown criterion " + which);
}

Checker& shared_checker() {
  static Checker checker(Catalog::builtin());
  return checker;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equational reasoning over monoid varieties";

  m.def("normalize", [](const std::string& w) { return Word::parse(w).str(); },
        py::arg("word"));

  m.def("decompose",
        [](const std::string& w) { return dumped(report::decomposition(Word::parse(w))); },
        py::arg("word"));

  m.def(
      "criterion",
      [](const std::string& which, const std::string& id, std::size_t n) {
        auto parsed = Identity::parse(id);
        return dumped(report::criterion(parsed, which, run_criterion(which, parsed, n)));
      },
      py::arg("which"), py::arg("identity"), py::arg("n") = 2);

  m.def(
      "derive",
      [](const std::string& id, const std::string& system, std::size_t len_cap,
         std::size_t max_states) {
        auto parsed = Identity::parse(id);
        SearchBudget b;
        b.len_cap = len_cap;
        b.max_states = max_states;
        auto r = derive(parsed.lhs, parsed.rhs, parse_system(system), b);
        return dumped(report::derive(parsed, r));
      },
      py::arg("identity"), py::arg("system"), py::arg("len_cap") = 0,
      py::arg("max_states") = 200000);

  m.def(
      "check",
      [](const std::string& variety, const std::string& id) {
        return dumped(report::verdict(shared_checker().satisfies(variety, Identity::parse(id))));
      },
      py::arg("variety"), py::arg("identity"));

  m.def(
      "includes",
      [](const std::string& v, const std::string& w) {
        return dumped(report::inclusion(v, w, shared_checker().includes(v, w)));
      },
      py::arg("v"), py::arg("w"));

  m.def("varieties", [] { return Catalog::builtin().names(); });

  m.def(
      "rees",
      [](const std::vector<std::string>& words, bool table) {
        std::vector<Word> ws;
        for (const auto& w : words) ws.push_back(Word::parse(w));
        return dumped(report::rees(build_S(ws), table));
      },
      py::arg("words"), py::arg("table") = false);

  m.def(
      "rigid",
      [](const std::string& id, unsigned n, unsigned j) {
        return dumped(report::rigid(normalize_rigid(Identity::parse(id), n, j)));
      },
      py::arg("identity"), py::arg("n"), py::arg("j") = 0);

  m.def("replay", [] { return dumped(report::replay(replay_all())); });
}
