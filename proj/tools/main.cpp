#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxatom/differential.hpp"
#include "maxatom/io.hpp"
#include "maxatom/oracle.hpp"
#include "maxatom/solver.hpp"

namespace {

constexpr int kExitSat = 0;
constexpr int kExitTrivial = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_solve(const std::string& path) {
  const maxatom::AtomSystem system = maxatom::parse_instance(slurp(path));
  const maxatom::SolveResult res = maxatom::solve(system);
  switch (res.outcome.status) {
    case maxatom::SolveStatus::NonTrivial:
      std::cout << maxatom::emit_solution(true, res.outcome.assignment);
      return kExitSat;
    case maxatom::SolveStatus::TrivialOnly:
      std::cout << maxatom::emit_solution(false, res.outcome.assignment);
      return kExitTrivial;
    case maxatom::SolveStatus::BoundExceeded:
      std::cerr << "internal bound exceeded: " << res.outcome.diagnostic << "\n";
      return kExitInternal;
  }
  return kExitInternal;
}

int cmd_oracle(const std::string& path, bool exhaustive, std::int64_t threshold, bool has_threshold) {
  const maxatom::AtomSystem system = maxatom::parse_instance(slurp(path));
  maxatom::OracleVerdict v;
  if (exhaustive) {
    v = maxatom::exhaustive_search(system, has_threshold ? threshold : 0);
  } else {
    v = maxatom::kleene_descent(system, has_threshold ? std::optional<std::int64_t>(threshold) : std::nullopt);
  }
  std::cout << maxatom::emit_solution(v.nontrivial, v.assignment);
  return v.nontrivial ? kExitSat : kExitTrivial;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path) {
  const maxatom::AtomSystem system = maxatom::parse_instance(slurp(instance_path));
  const maxatom::Assignment a = maxatom::parse_solution(slurp(solution_path), system.nvars());
  const maxatom::VerifyReport rep = maxatom::verify(system, a);
  if (rep.satisfied) {
    std::cout << "satisfied " << (rep.nontrivial ? "nontrivial" : "trivial") << "\n";
    return kExitSat;
  }
  for (const maxatom::MaxAtom& atom : rep.violated)
    std::cout << "violated atom " << atom.left1.index << " " << atom.left2.index << " " << atom.right.index
              << " " << atom.offset.str() << "\n";
  return kExitTrivial;
}

int cmd_gen(int vars, int atoms, std::int64_t range, std::uint64_t seed, const std::string& mode_name) {
  const auto mode = maxatom::gen_mode_from(mode_name);
  if (!mode) throw std::runtime_error("unknown mode '" + mode_name + "'");
  std::cout << maxatom::emit_instance(maxatom::generate(vars, atoms, range, seed, *mode));
  return kExitSat;
}

int cmd_fuzz(long trials, int vars, int atoms, std::int64_t range, std::uint64_t seed, const std::string& report) {
  maxatom::TrialParams params;
  params.max_vars = vars;
  params.max_atoms = atoms;
  params.range = range;
  const maxatom::CampaignReport rep = maxatom::run_differential(trials, params, seed, report);
  std::cout << maxatom::campaign_summary(rep);
  return (rep.flagged.empty() && !rep.aborted) ? kExitSat : kExitInternal;
}

int cmd_bench(const std::string& sizes, std::uint64_t seed) {
  std::vector<std::pair<int, int>> todo;
  std::stringstream ss(sizes);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::runtime_error("sizes must look like 10:20,20:40");
    todo.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
  }
  std::cout << "n\tm\tatoms\tstatus\tms\tkill\tmerge\trounds\tdkills\tsteps\tpeak\tbounds\n";
  bool all_ok = true;
  for (const auto& [n, m] : todo) {
    const maxatom::AtomSystem system = maxatom::generate(n, m, 8, seed, maxatom::GenMode::Planted);
    const auto start = std::chrono::steady_clock::now();
    const maxatom::SolveResult res = maxatom::solve(system);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const char* status = res.outcome.status == maxatom::SolveStatus::NonTrivial
                             ? "sat"
                             : res.outcome.status == maxatom::SolveStatus::TrivialOnly ? "trivial" : "error";
    const bool ok = res.counters.within_bounds(system.nvars(), static_cast<int>(system.atoms().size()));
    const auto& c = res.counters;
    std::cout << n << "\t" << m << "\t" << system.atoms().size() << "\t" << status << "\t" << ms << "\t"
              << c.kill_restarts << "\t" << c.merge_restarts << "\t" << c.simplify_rounds << "\t"
              << c.decision_kills << "\t" << c.decision_steps_max << "\t" << c.atoms_peak << "\t"
              << (ok ? "ok" : "VIOLATED") << "\n";
    if (!ok || res.outcome.status == maxatom::SolveStatus::BoundExceeded) all_ok = false;
  }
  return all_ok ? kExitSat : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-atom feasibility solver and differential test harness"};
  app.require_subcommand(1);

  std::string path, solution, report, mode = "uniform", sizes = "10:20,20:40,40:80";
  int vars = 4, atoms = 8;
  std::int64_t range = 5, threshold = 0;
  std::uint64_t seed = 1;
  long trials = 100;
  bool exhaustive = false;

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("file", path, "instance file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "run a reference solver on an instance file");
  oracle_cmd->add_option("file", path, "instance file")->required();
  auto* thr = oracle_cmd->add_option("--threshold", threshold, "cutoff depth in scaled integer units");
  oracle_cmd->add_flag("--exhaustive", exhaustive, "use the grid search instead of descent");

  auto* verify_cmd = app.add_subcommand("verify", "check a solution file against an instance");
  verify_cmd->add_option("file", path, "instance file")->required();
  verify_cmd->add_option("solution", solution, "solution file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "emit a random instance");
  gen_cmd->add_option("--vars", vars, "variable count")->required();
  gen_cmd->add_option("--atoms", atoms, "atom count")->required();
  gen_cmd->add_option("--range", range, "offset magnitude bound");
  gen_cmd->add_option("--seed", seed, "rng seed");
  gen_cmd->add_option("--mode", mode, "uniform|planted|chains|cycles");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "differential campaign against the oracle");
  fuzz_cmd->add_option("--trials", trials, "trial count")->required();
  fuzz_cmd->add_option("--vars", vars, "max variables per instance");
  fuzz_cmd->add_option("--atoms", atoms, "max atoms per instance");
  fuzz_cmd->add_option("--range", range, "offset magnitude bound");
  fuzz_cmd->add_option("--seed", seed, "campaign seed");
  fuzz_cmd->add_option("--report", report, "append flagged records here, one JSON object per line");

  auto* bench_cmd = app.add_subcommand("bench", "timing table on planted instances");
  bench_cmd->add_option("--sizes", sizes, "comma list of n:m pairs");
  bench_cmd->add_option("--seed", seed, "rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(path);
    if (oracle_cmd->parsed()) return cmd_oracle(path, exhaustive, threshold, thr->count() > 0);
    if (verify_cmd->parsed()) return cmd_verify(path, solution);
    if (gen_cmd->parsed()) return cmd_gen(vars, atoms, range, seed, mode);
    if (fuzz_cmd->parsed()) return cmd_fuzz(trials, vars, atoms, range, seed, report);
    if (bench_cmd->parsed()) return cmd_bench(sizes, seed);
  } catch (const maxatom::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const maxatom::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
