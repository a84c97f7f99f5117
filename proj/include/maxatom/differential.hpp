#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxatom/generator.hpp"
#include "maxatom/solver.hpp"

namespace maxatom {

/// Size envelope for generated campaign instances.
struct TrialParams {
  int max_vars = 6;
  int max_atoms = 10;
  std::int64_t range = 5;
};

/// Everything needed to replay and adjudicate one trial. A record is flagged
/// when anything disagrees: solver and oracle verdicts differ, a claimed
/// assignment fails verification, a counter bound trips, or a planted
/// instance comes back unsolved.
struct TrialRecord {
  long index = -1;
  std::uint64_t seed = 0;
  GenMode mode = GenMode::Uniform;
  int nvars = 0;
  int natoms = 0;  // requested; the instance itself may hold fewer
  std::int64_t range = 0;
  std::string instance;

  std::string solver_status;  // sat | trivial | error
  std::string oracle_status;  // sat | trivial
  bool verified = false;      // claimed assignments re-checked against the instance
  bool agree = false;
  bool bounds_ok = false;
  StepCounters counters;
  double wall_ms = 0.0;
  std::string diagnostic;

  bool flagged = false;
};

struct CampaignReport {
  long trials = 0;
  long agreements = 0;
  long disagreements = 0;
  long solver_sat = 0;
  long solver_trivial = 0;
  long solver_errors = 0;
  long verify_failures = 0;
  long bound_violations = 0;
  long planted_trials = 0;
  long planted_solved = 0;
  long persisted = 0;
  bool aborted = false;
  std::string abort_reason;
  std::vector<TrialRecord> flagged;
};

std::uint64_t derive_trial_seed(std::uint64_t campaign_seed, long index);

/// Generates, solves, adjudicates against the descent oracle, and verifies.
/// Bit-deterministic in its arguments.
TrialRecord run_trial(long index, std::uint64_t trial_seed, GenMode mode, int nvars, int natoms, std::int64_t range);

/// Re-executes a record from its stored parameters.
TrialRecord replay(const TrialRecord& record);

/// True when the replay reproduced the record exactly (wall time aside).
bool records_match(const TrialRecord& a, const TrialRecord& b);

/// Runs `trials` independent trials cycling through the four generator
/// modes. Every flagged record is appended to report_path (one JSON object
/// per line) when the path is non-empty. A verified non-trivial answer on an
/// instance the oracle calls trivial would falsify the oracle itself and
/// aborts the campaign.
CampaignReport run_differential(long trials, const TrialParams& params, std::uint64_t seed,
                                const std::string& report_path);

std::string record_to_json(const TrialRecord& record);
std::string campaign_summary(const CampaignReport& report);

}  // namespace maxatom
