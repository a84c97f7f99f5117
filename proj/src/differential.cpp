#include "maxatom/differential.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "maxatom/io.hpp"
#include "maxatom/oracle.hpp"

namespace maxatom {
namespace {

constexpr GenMode kModeCycle[4] = {GenMode::Uniform, GenMode::Planted, GenMode::Chains, GenMode::Cycles};

nlohmann::json counters_to_json(const StepCounters& c) {
  return {
      {"kill_restarts", c.kill_restarts},
      {"merge_restarts", c.merge_restarts},
      {"simplify_rounds", c.simplify_rounds},
      {"decision_kills", c.decision_kills},
      {"decision_steps_max", c.decision_steps_max},
      {"atoms_peak", c.atoms_peak},
  };
}

}  // namespace

std::uint64_t derive_trial_seed(std::uint64_t campaign_seed, long index) {
  // splitmix64 of the pair; decorrelates consecutive trial streams.
  std::uint64_t x = campaign_seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

TrialRecord run_trial(long index, std::uint64_t trial_seed, GenMode mode, int nvars, int natoms, std::int64_t range) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = trial_seed;
  rec.mode = mode;
  rec.nvars = nvars;
  rec.natoms = natoms;
  rec.range = range;

  const AtomSystem system = generate(nvars, natoms, range, trial_seed, mode);
  rec.instance = emit_instance(system);

  const auto start = std::chrono::steady_clock::now();
  const SolveResult res = solve(system);
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rec.counters = res.counters;
  rec.bounds_ok = res.counters.within_bounds(system.nvars(), static_cast<int>(system.atoms().size()));
  rec.diagnostic = res.outcome.diagnostic;

  rec.verified = true;
  switch (res.outcome.status) {
    case SolveStatus::NonTrivial:
      rec.solver_status = "sat";
      rec.verified = verify(system, res.outcome.assignment).satisfied && res.outcome.assignment.nontrivial();
      break;
    case SolveStatus::TrivialOnly: rec.solver_status = "trivial"; break;
    case SolveStatus::BoundExceeded: rec.solver_status = "error"; break;
  }

  const OracleVerdict oracle = kleene_descent(system);
  rec.oracle_status = oracle.nontrivial ? "sat" : "trivial";

  rec.agree = rec.solver_status == rec.oracle_status;
  rec.flagged = !rec.agree || !rec.verified || !rec.bounds_ok || rec.solver_status == "error" ||
                (mode == GenMode::Planted && rec.solver_status != "sat");
  return rec;
}

TrialRecord replay(const TrialRecord& record) {
  return run_trial(record.index, record.seed, record.mode, record.nvars, record.natoms, record.range);
}

bool records_match(const TrialRecord& a, const TrialRecord& b) {
  return a.seed == b.seed && a.mode == b.mode && a.nvars == b.nvars && a.natoms == b.natoms &&
         a.range == b.range && a.instance == b.instance && a.solver_status == b.solver_status &&
         a.oracle_status == b.oracle_status && a.verified == b.verified && a.agree == b.agree &&
         a.bounds_ok == b.bounds_ok && a.counters.kill_restarts == b.counters.kill_restarts &&
         a.counters.merge_restarts == b.counters.merge_restarts &&
         a.counters.simplify_rounds == b.counters.simplify_rounds &&
         a.counters.decision_kills == b.counters.decision_kills &&
         a.counters.decision_steps_max == b.counters.decision_steps_max &&
         a.counters.atoms_peak == b.counters.atoms_peak;
}

CampaignReport run_differential(long trials, const TrialParams& params, std::uint64_t seed,
                                const std::string& report_path) {
  CampaignReport report;
  std::ofstream sink;
  if (!report_path.empty()) {
    sink.open(report_path, std::ios::app);
    if (!sink) throw std::runtime_error("cannot open report file: " + report_path);
  }

  std::mt19937_64 sizes(derive_trial_seed(seed, -1));
  for (long i = 0; i < trials; ++i) {
    const GenMode mode = kModeCycle[i % 4];
    const int nvars = 1 + static_cast<int>(sizes() % static_cast<std::uint64_t>(params.max_vars));
    const int natoms = 1 + static_cast<int>(sizes() % static_cast<std::uint64_t>(params.max_atoms));
    const TrialRecord rec = run_trial(i, derive_trial_seed(seed, i), mode, nvars, natoms, params.range);

    ++report.trials;
    if (rec.agree) ++report.agreements; else ++report.disagreements;
    if (rec.solver_status == "sat") ++report.solver_sat;
    if (rec.solver_status == "trivial") ++report.solver_trivial;
    if (rec.solver_status == "error") ++report.solver_errors;
    if (!rec.verified) ++report.verify_failures;
    if (!rec.bounds_ok) ++report.bound_violations;
    if (mode == GenMode::Planted) {
      ++report.planted_trials;
      if (rec.solver_status == "sat" && rec.verified) ++report.planted_solved;
    }

    if (rec.flagged) {
      report.flagged.push_back(rec);
      if (sink.is_open()) {
        sink << record_to_json(rec) << "\n";
        sink.flush();
        ++report.persisted;
      } else {
        ++report.persisted;
      }
    }

    // A verified non-trivial answer on an oracle-trivial instance means the
    // oracle is wrong; everything downstream of it would be meaningless.
    if (rec.solver_status == "sat" && rec.verified && rec.oracle_status == "trivial") {
      report.aborted = true;
      report.abort_reason = "oracle falsified by verified assignment, trial " + std::to_string(i);
      break;
    }
  }
  return report;
}

std::string record_to_json(const TrialRecord& rec) {
  nlohmann::json j{
      {"index", rec.index},
      {"seed", rec.seed},
      {"mode", gen_mode_name(rec.mode)},
      {"vars", rec.nvars},
      {"atoms", rec.natoms},
      {"range", rec.range},
      {"instance", rec.instance},
      {"solver", rec.solver_status},
      {"oracle", rec.oracle_status},
      {"verified", rec.verified},
      {"agree", rec.agree},
      {"bounds_ok", rec.bounds_ok},
      {"counters", counters_to_json(rec.counters)},
      {"wall_ms", rec.wall_ms},
      {"diagnostic", rec.diagnostic},
  };
  return j.dump();
}

std::string campaign_summary(const CampaignReport& r) {
  std::ostringstream out;
  out << "trials " << r.trials << "\n";
  out << "agreements " << r.agreements << "\n";
  out << "disagreements " << r.disagreements << "\n";
  out << "solver sat/trivial/error " << r.solver_sat << "/" << r.solver_trivial << "/" << r.solver_errors << "\n";
  out << "verify failures " << r.verify_failures << "\n";
  out << "bound violations " << r.bound_violations << "\n";
  out << "planted solved " << r.planted_solved << "/" << r.planted_trials << "\n";
  out << "records persisted " << r.persisted << "\n";
  if (r.aborted) out << "ABORTED: " << r.abort_reason << "\n";
  return out.str();
}

}  // namespace maxatom
