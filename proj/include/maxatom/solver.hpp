#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "maxatom/graph.hpp"
#include "maxatom/rules.hpp"

namespace maxatom {

/// Outcome of trying one ordering hi >= lo between the left variables of a
/// two-variable atom: infeasible if the derived single-variable constraints
/// close a positive circuit, otherwise feasible with the synthesis graph.
struct DecisionResult {
  bool feasible = false;
  WeightedDigraph graph;       // meaningful only when feasible
  std::int64_t steps = 0;      // internal work charge, see StepCounters::decision_step_bound
  std::size_t atoms_peak = 0;  // largest saturated working-set size
};

enum class SolveStatus {
  NonTrivial,     // a verified assignment with >= 1 finite component
  TrivialOnly,    // only the all -inf assignment satisfies the system
  BoundExceeded,  // an internal bound tripped or the verify gate failed
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::TrivialOnly;
  Assignment assignment;   // total over the original universe when NonTrivial
  std::string diagnostic;  // populated for BoundExceeded
};

/// Loop and work counters, with the bounds the solver is expected to obey.
/// Exceeding a bound aborts the solve with BoundExceeded rather than looping
/// on: the bounds are part of the contract under test.
struct StepCounters {
  int kill_restarts = 0;    // restarts after -inf propagation; <= n
  int merge_restarts = 0;   // restarts after merging equal variables; <= n
  int simplify_rounds = 0;  // max simplification-loop repeats between restarts; <= m
  int decision_kills = 0;   // both-orderings-infeasible events; <= n
  std::int64_t decision_steps_max = 0;  // max per-decision work charge
  std::size_t atoms_peak = 0;           // largest saturated atom-set size; <= m + n^2

  static std::int64_t decision_step_bound(int nvars, int natoms);
  bool within_bounds(int nvars, int natoms) const;
};

struct SolveResult {
  SolveOutcome outcome;
  StepCounters counters;
};

/// Fixes the seeds to -inf and cascades: atoms bounding a dead variable are
/// dropped, a dead max operand is erased from the left side, and a fully dead
/// left side kills the right variable. Runs to fixpoint.
AtomSystem propagate_minus_infinity(AtomSystem system, const std::set<VarId>& seeds);

/// The decision subroutine: assumes hi >= lo, linearizes the atom into
/// hi + 0 >= lo and hi + r >= right, then alternates rule saturation with
/// closure injection until the atom set stabilizes or a positive circuit
/// appears. The caller's system is never touched.
DecisionResult try_decision(VarId hi, VarId lo, const MaxAtom& atom, const AtomSystem& system);

/// Union-find merge plus atom rewrite: every occurrence of drop is replaced
/// by keep's representative; duplicates collapse; reflexive leftovers stay
/// for the next simplification pass.
AtomSystem merge_variables(AtomSystem system, VarId keep, VarId drop);

/// Max-weight union of the synthesis graphs of feasible decisions.
/// Throws InternalError if any input is infeasible.
WeightedDigraph aggregate_decision_graphs(const std::vector<DecisionResult>& results);

/// Full solve. Any NonTrivial answer has been checked against the original
/// system; a candidate that fails that gate comes back as BoundExceeded with
/// the failing atom in the diagnostic.
SolveResult solve(const AtomSystem& input);

}  // namespace maxatom
