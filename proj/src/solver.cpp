#include "maxatom/solver.hpp"

#include <algorithm>
#include <utility>

namespace maxatom {

std::int64_t StepCounters::decision_step_bound(int nvars, int natoms) {
  const std::int64_t n = nvars;
  const std::int64_t m = natoms;
  const std::int64_t f = m + n * n;
  return m * (3 * f * f + f + 2 * n * n * n);
}

bool StepCounters::within_bounds(int nvars, int natoms) const {
  return kill_restarts <= nvars && merge_restarts <= nvars && decision_kills <= nvars &&
         simplify_rounds <= natoms && decision_steps_max <= decision_step_bound(nvars, natoms) &&
         atoms_peak <= static_cast<std::size_t>(natoms) + static_cast<std::size_t>(nvars) * static_cast<std::size_t>(nvars);
}

AtomSystem propagate_minus_infinity(AtomSystem system, const std::set<VarId>& seeds) {
  for (VarId s : seeds) system.kill(s);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<MaxAtom> atoms(system.atoms().begin(), system.atoms().end());
    for (const MaxAtom& a : atoms) {
      const bool l1_dead = system.is_killed(a.left1);
      const bool l2_dead = system.is_killed(a.left2);
      const bool r_dead = system.is_killed(a.right);
      if (!l1_dead && !l2_dead && !r_dead) continue;
      system.erase(a);
      changed = true;
      if (r_dead) continue;  // max(z,y)+r >= -inf holds outright
      if (l1_dead && l2_dead) {
        system.kill(a.right);  // -inf + r >= x forces x to -inf
        continue;
      }
      const VarId live = l1_dead ? a.left2 : a.left1;
      if (live == a.right) {
        // x + r >= x: vacuous for r >= 0, kills x otherwise.
        if (a.offset.sign() < 0) system.kill(a.right);
        continue;
      }
      system.add(MaxAtom(live, live, a.right, a.offset));
    }
  }
  return system;
}

DecisionResult try_decision(VarId hi, VarId lo, const MaxAtom& atom, const AtomSystem& system) {
  if (atom.is_single()) throw std::invalid_argument("decision needs an atom with distinct left variables");
  if (!system.contains(atom)) throw std::invalid_argument("decision atom is not part of the system");
  const bool pair_ok = (hi == atom.left1 && lo == atom.left2) || (hi == atom.left2 && lo == atom.left1);
  if (!pair_ok) throw std::invalid_argument("decision pair must be the atom's left variables");

  AtomSystem work = system;
  work.erase(atom);
  work.add(MaxAtom(hi, hi, lo, Rat(0)));
  work.add(MaxAtom(hi, hi, atom.right, atom.offset));

  const std::int64_t n = system.nvars();
  const std::int64_t graph_charge = n * n * n;
  const long iter_bound = static_cast<long>(work.atoms().size()) + 4;

  DecisionResult res;
  for (long iter = 0;; ++iter) {
    if (iter > iter_bound)
      throw InternalError("decision loop did not stabilize within " + std::to_string(iter_bound) + " iterations");
    const std::set<MaxAtom> before = work.atoms();
    const RewriteOutcome sat = saturate_rules(work);
    res.steps += sat.pairs_examined;
    res.atoms_peak = std::max(res.atoms_peak, work.atoms().size());

    WeightedDigraph g = graph_from_atoms(work);
    res.steps += static_cast<std::int64_t>(work.atoms().size());
    res.steps += graph_charge;
    if (positive_circuit(g)) {
      res.feasible = false;
      return res;
    }
    res.steps += graph_charge;
    const ClosureResult closure = max_weight_closure(g);
    for (const MaxAtom& a : closure_to_atoms(closure)) work.add(a);
    if (work.atoms() == before) {
      res.feasible = true;
      res.graph = std::move(g);
      return res;
    }
  }
}

AtomSystem merge_variables(AtomSystem system, VarId keep, VarId drop) {
  const VarId k = system.resolve(keep);
  const VarId d = system.resolve(drop);
  if (k == d) throw std::invalid_argument("merge of a variable with itself");
  if (system.is_killed(k) || system.is_killed(d)) throw std::invalid_argument("merge of a dead variable");
  system.merge_classes(k, d);
  const std::vector<MaxAtom> atoms(system.atoms().begin(), system.atoms().end());
  for (const MaxAtom& a : atoms) {
    const MaxAtom mapped(system.resolve(a.left1), system.resolve(a.left2), system.resolve(a.right), a.offset);
    if (canonicalize(mapped) == a) continue;
    system.erase(a);
    system.add(mapped);
  }
  return system;
}

WeightedDigraph aggregate_decision_graphs(const std::vector<DecisionResult>& results) {
  WeightedDigraph out;
  for (const DecisionResult& r : results) {
    if (!r.feasible) throw InternalError("aggregating an infeasible decision graph");
    out = graph_sum(out, r.graph);
  }
  return out;
}

namespace {

/// One end-to-end solve; throws InternalError when a bound or the verify
/// gate trips, with counters preserved by the caller.
class Driver {
 public:
  explicit Driver(const AtomSystem& input)
      : original_(input),
        sys_(input),
        n0_(input.nvars()),
        m0_(static_cast<int>(input.atoms().size())),
        step_budget_(StepCounters::decision_step_bound(input.nvars(), static_cast<int>(input.atoms().size()))) {}

  StepCounters counters;

  SolveResult run() {
    while (true) {
      note_restart();
      if (min_offset_nonneg()) return finish_with_zeros();
      rule_reflexive(sys_);
      rule_same_args_dominance(sys_);
      note_atoms();

      if (!simplify_loop()) {  // a circuit killed variables
        if (all_dead_) return trivial();
        continue;
      }

      if (sys_.two_var_atom_count() == 0) return finish_with_graph(graph_from_atoms(sys_));

      std::vector<DecisionResult> retained;
      if (!decide_pass(retained)) {  // a kill or a merge interrupted the pass
        if (all_dead_) return trivial();
        continue;
      }
      return finish_with_graph(aggregate_decision_graphs(retained));
    }
  }

 private:
  const AtomSystem& original_;
  AtomSystem sys_;
  const int n0_;
  const int m0_;
  const std::int64_t step_budget_;
  bool all_dead_ = false;
  bool have_measure_ = false;
  int prev_live_ = 0;
  int prev_twovar_ = 0;

  void note_restart() {
    const int live = sys_.live_count();
    const int twovar = sys_.two_var_atom_count();
    if (have_measure_) {
      const bool decreased = live < prev_live_ || (live == prev_live_ && twovar < prev_twovar_);
      if (!decreased)
        throw InternalError("restart made no progress: live " + std::to_string(prev_live_) + "->" + std::to_string(live) +
                            ", two-var atoms " + std::to_string(prev_twovar_) + "->" + std::to_string(twovar));
    }
    have_measure_ = true;
    prev_live_ = live;
    prev_twovar_ = twovar;
  }

  void note_atoms() {
    counters.atoms_peak = std::max(counters.atoms_peak, sys_.atoms().size());
    const std::size_t cap = static_cast<std::size_t>(m0_) + static_cast<std::size_t>(n0_) * static_cast<std::size_t>(n0_);
    if (counters.atoms_peak > cap)
      throw InternalError("saturated atom set grew to " + std::to_string(counters.atoms_peak) + ", cap " + std::to_string(cap));
  }

  bool min_offset_nonneg() const {
    for (const MaxAtom& a : sys_.atoms())
      if (a.offset.sign() < 0) return false;
    return true;
  }

  /// Kills the seeds, cascades, and notes whether the whole system died.
  void kill(const std::set<VarId>& seeds) {
    sys_ = propagate_minus_infinity(std::move(sys_), seeds);
    all_dead_ = sys_.live_count() == 0;
    if (!all_dead_) {
      ++counters.kill_restarts;
      if (counters.kill_restarts > n0_)
        throw InternalError("kill restarts exceeded the variable count " + std::to_string(n0_));
    }
  }

  /// The simplification loop: graph, circuit check, closure injection, rule
  /// saturation, until the atom set stabilizes. Returns false when a circuit
  /// was found (variables killed; caller restarts or finishes).
  bool simplify_loop() {
    int rounds = 0;
    while (true) {
      const std::set<MaxAtom> before = sys_.atoms();
      WeightedDigraph g = graph_from_atoms(sys_);
      if (const auto cyc = positive_circuit(g)) {
        kill(std::set<VarId>(cyc->begin(), cyc->end()));
        counters.simplify_rounds = std::max(counters.simplify_rounds, rounds);
        return false;
      }
      if (!g.empty()) {
        const ClosureResult closure = max_weight_closure(g);
        for (const MaxAtom& a : closure_to_atoms(closure)) sys_.add(a);
      }
      saturate_rules(sys_);
      note_atoms();
      if (sys_.atoms() == before) break;
      if (++rounds > m0_)
        throw InternalError("simplification loop repeated " + std::to_string(rounds) + " times, cap " + std::to_string(m0_));
    }
    counters.simplify_rounds = std::max(counters.simplify_rounds, rounds);
    return true;
  }

  void note_decision(const DecisionResult& d) {
    counters.decision_steps_max = std::max(counters.decision_steps_max, d.steps);
    counters.atoms_peak = std::max(counters.atoms_peak, d.atoms_peak);
    if (d.steps > step_budget_)
      throw InternalError("decision work " + std::to_string(d.steps) + " exceeded budget " + std::to_string(step_budget_));
    note_atoms();
  }

  /// Tries both orderings for every remaining two-variable atom. Returns
  /// false when a kill or merge interrupted the pass (restart), true when
  /// every atom retained exactly one feasible decision.
  bool decide_pass(std::vector<DecisionResult>& retained) {
    std::vector<MaxAtom> pending;
    for (const MaxAtom& a : sys_.atoms())
      if (!a.is_single()) pending.push_back(a);
    for (const MaxAtom& atom : pending) {
      DecisionResult first = try_decision(atom.left1, atom.left2, atom, sys_);
      note_decision(first);
      DecisionResult second = try_decision(atom.left2, atom.left1, atom, sys_);
      note_decision(second);
      if (!first.feasible && !second.feasible) {
        ++counters.decision_kills;
        if (counters.decision_kills > n0_)
          throw InternalError("decision kills exceeded the variable count " + std::to_string(n0_));
        kill({atom.left1, atom.left2});
        return false;
      }
      if (first.feasible && second.feasible) {
        sys_ = merge_variables(std::move(sys_), atom.left1, atom.left2);
        ++counters.merge_restarts;
        if (counters.merge_restarts > n0_)
          throw InternalError("merge restarts exceeded the variable count " + std::to_string(n0_));
        return false;
      }
      retained.push_back(first.feasible ? std::move(first) : std::move(second));
    }
    return true;
  }

  SolveResult trivial() const {
    SolveResult r;
    r.outcome.status = SolveStatus::TrivialOnly;
    r.outcome.assignment = Assignment(n0_);
    r.counters = counters;
    return r;
  }

  Assignment expand(const std::map<VarId, Rat>& live_values) const {
    Assignment a(n0_);
    for (int i = 1; i <= n0_; ++i) {
      const VarId rep = sys_.resolve(VarId(i));
      if (!sys_.is_killed(rep)) a[VarId(i)] = ExtValue::finite(live_values.at(rep));
    }
    return a;
  }

  SolveResult gate(Assignment candidate) const {
    const VerifyReport rep = verify(original_, candidate);
    if (!rep.satisfied)
      throw InternalError("candidate failed verification against " + rep.violated.front().str());
    if (!rep.nontrivial) throw InternalError("candidate collapsed to the all -inf assignment");
    SolveResult r;
    r.outcome.status = SolveStatus::NonTrivial;
    r.outcome.assignment = std::move(candidate);
    r.counters = counters;
    return r;
  }

  SolveResult finish_with_zeros() const {
    std::map<VarId, Rat> zeros;
    for (VarId v : sys_.live_vars()) zeros.emplace(v, Rat(0));
    return gate(expand(zeros));
  }

  SolveResult finish_with_graph(const WeightedDigraph& g) const {
    return gate(expand(extract_solution(g, sys_.live_vars())));
  }
};

}  // namespace

SolveResult solve(const AtomSystem& input) {
  Driver driver(input);
  try {
    return driver.run();
  } catch (const InternalError& e) {
    SolveResult r;
    r.outcome.status = SolveStatus::BoundExceeded;
    r.outcome.assignment = Assignment(input.nvars());
    r.outcome.diagnostic = e.what();
    r.counters = driver.counters;
    return r;
  }
}

}  // namespace maxatom
