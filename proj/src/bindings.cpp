#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maxatom/differential.hpp"
#include "maxatom/io.hpp"
#include "maxatom/oracle.hpp"
#include "maxatom/solver.hpp"

namespace py = pybind11;
using namespace maxatom;

namespace {

py::dict values_dict(const Assignment& a) {
  py::dict out;
  for (int i = 1; i <= a.size(); ++i)
    out[py::str("x" + std::to_string(i))] = a[VarId(i)].str();
  return out;
}

py::dict counters_dict(const StepCounters& c) {
  py::dict out;
  out["kill_restarts"] = c.kill_restarts;
  out["merge_restarts"] = c.merge_restarts;
  out["simplify_rounds"] = c.simplify_rounds;
  out["decision_kills"] = c.decision_kills;
  out["decision_steps_max"] = c.decision_steps_max;
  out["atoms_peak"] = c.atoms_peak;
  return out;
}

Assignment assignment_from_dict(const AtomSystem& system, const py::dict& values) {
  Assignment a(system.nvars());
  for (const auto& item : values) {
    const std::string key = py::cast<std::string>(item.first);
    if (key.size() < 2 || key[0] != 'x') throw py::value_error("keys must look like 'x3'");
    const int idx = std::stoi(key.substr(1));
    if (idx < 1 || idx > system.nvars()) throw py::value_error("variable " + key + " out of range");
    const std::string val = py::cast<std::string>(py::str(item.second));
    if (val == "-inf") continue;
    const auto r = Rat::parse(val);
    if (!r) throw py::value_error("bad rational '" + val + "'");
    a[VarId(idx)] = ExtValue::finite(*r);
  }
  return a;
}

py::dict verdict_dict(const OracleVerdict& v) {
  py::dict out;
  out["status"] = v.nontrivial ? "sat" : "trivial";
  out["values"] = v.nontrivial ? py::object(values_dict(v.assignment)) : py::none();
  out["iterations"] = v.iterations;
  out["threshold"] = v.threshold.str();
  return out;
}

}  // namespace

PYBIND11_MODULE(_maxatom, m) {
  m.doc() = "max-atom constraint solver (max(z,y)+r >= x over rationals with -inf)";

  py::class_<AtomSystem>(m, "AtomSystem")
      .def_property_readonly("nvars", &AtomSystem::nvars)
      .def_property_readonly("natoms", [](const AtomSystem& s) { return s.atoms().size(); })
      .def("__repr__", [](const AtomSystem& s) {
        return "<AtomSystem vars=" + std::to_string(s.nvars()) + " atoms=" + std::to_string(s.atoms().size()) + ">";
      });

  m.def("parse_instance", [](const std::string& text) {
    try {
      return parse_instance(text);
    } catch (const ParseError& e) {
      throw py::value_error(e.what());
    }
  }, py::arg("text"), "Parse instance text into a system.");

  m.def("emit_instance", &emit_instance, py::arg("system"), "Canonical instance text for a system.");

  m.def("generate", [](int vars, int atoms, std::int64_t range, std::uint64_t seed, const std::string& mode) {
    const auto m_ = gen_mode_from(mode);
    if (!m_) throw py::value_error("mode must be uniform|planted|chains|cycles");
    return generate(vars, atoms, range, seed, *m_);
  }, py::arg("vars"), py::arg("atoms"), py::arg("range") = 5, py::arg("seed") = 1, py::arg("mode") = "uniform",
     "Deterministic random instance.");

  m.def("solve", [](const AtomSystem& system) {
    const SolveResult res = solve(system);
    py::dict out;
    switch (res.outcome.status) {
      case SolveStatus::NonTrivial: out["status"] = "sat"; break;
      case SolveStatus::TrivialOnly: out["status"] = "trivial"; break;
      case SolveStatus::BoundExceeded: out["status"] = "error"; break;
    }
    out["values"] = res.outcome.status == SolveStatus::NonTrivial ? py::object(values_dict(res.outcome.assignment))
                                                                  : py::none();
    out["counters"] = counters_dict(res.counters);
    out["diagnostic"] = res.outcome.diagnostic;
    return out;
  }, py::arg("system"), "Solve; any 'sat' answer has already passed verification.");

  m.def("kleene", [](const AtomSystem& system, std::optional<std::int64_t> threshold) {
    return verdict_dict(kleene_descent(system, threshold));
  }, py::arg("system"), py::arg("threshold") = py::none(), "Greatest-solution descent oracle.");

  m.def("exhaustive", [](const AtomSystem& system, std::int64_t depth) {
    return verdict_dict(exhaustive_search(system, depth));
  }, py::arg("system"), py::arg("depth") = 0, "Grid-search oracle (n <= 5).");

  m.def("verify_values", [](const AtomSystem& system, const py::dict& values) {
    const VerifyReport rep = verify(system, assignment_from_dict(system, values));
    py::dict out;
    out["satisfied"] = rep.satisfied;
    out["nontrivial"] = rep.nontrivial;
    py::list violated;
    for (const MaxAtom& a : rep.violated) violated.append(a.str());
    out["violated"] = violated;
    return out;
  }, py::arg("system"), py::arg("values"), "Check a {'x1': '0', ...} assignment; missing keys mean -inf.");

  m.def("verify_text", [](const AtomSystem& system, const std::string& solution_text) {
    try {
      const VerifyReport rep = verify(system, parse_solution(solution_text, system.nvars()));
      py::dict out;
      out["satisfied"] = rep.satisfied;
      out["nontrivial"] = rep.nontrivial;
      py::list violated;
      for (const MaxAtom& a : rep.violated) violated.append(a.str());
      out["violated"] = violated;
      return out;
    } catch (const ParseError& e) {
      throw py::value_error(e.what());
    }
  }, py::arg("system"), py::arg("solution_text"), "Check a solution in the text format.");

  m.def("run_trial", [](std::uint64_t seed, const std::string& mode, int vars, int atoms, std::int64_t range) {
    const auto m_ = gen_mode_from(mode);
    if (!m_) throw py::value_error("mode must be uniform|planted|chains|cycles");
    const TrialRecord rec = run_trial(0, seed, *m_, vars, atoms, range);
    py::dict out;
    out["solver"] = rec.solver_status;
    out["oracle"] = rec.oracle_status;
    out["agree"] = rec.agree;
    out["verified"] = rec.verified;
    out["bounds_ok"] = rec.bounds_ok;
    out["instance"] = rec.instance;
    out["json"] = record_to_json(rec);
    return out;
  }, py::arg("seed"), py::arg("mode"), py::arg("vars"), py::arg("atoms"), py::arg("range") = 5,
     "One differential trial: generate, solve, adjudicate.");
}
