#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pou/construction.hpp"
#include "pou/dynamics.hpp"
#include "pou/errors.hpp"
#include "pou/harness.hpp"
#include "pou/io.hpp"
#include "pou/move_game.hpp"

namespace {

using namespace pou;

UncertaintyRule rule_from(const std::string& eps_text, const std::string& rule_text) {
  return make_rule(Rational::parse(eps_text), variant_from_name(rule_text));
}

std::vector<int> load_schedules(const std::vector<std::string>& paths) {
  std::vector<int> schedule;
  for (const std::string& path : paths) {
    const std::vector<int> part = read_schedule(path);
    schedule.insert(schedule.end(), part.begin(), part.end());
  }
  return schedule;
}

int cmd_generate(int n, const std::string& eps_text, const std::string& out_dir) {
  const Rational eps = Rational::parse(eps_text);
  auto [game, plan] = build_full(n, eps);
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path out(out_dir);
  write_instance(game, (out / "instance.json").string());
  write_plan(plan, (out / "plan.json").string());
  write_schedule(plan.phase1, (out / "phase1.sched").string());
  write_schedule(plan.phase2, (out / "phase2.sched").string());
  std::cout << "n_total=" << plan.n_total << " k=" << plan.k << " c=" << plan.c.str()
            << " layers=" << plan.layers.size()
            << " predicted_phase1_bad=" << plan.predicted_phase1_bad
            << " predicted_final_bad=" << plan.predicted_final_bad << "\n";
  return 0;
}

int cmd_simulate(const std::string& instance, const std::string& eps_text,
                 const std::string& rule_text, const std::vector<std::string>& schedule_paths,
                 bool strict, const std::string& trace_path, bool csv) {
  ConsensusGame game = read_instance(instance);
  const UncertaintyRule rule = rule_from(eps_text, rule_text);
  const std::vector<int> schedule = load_schedules(schedule_paths);

  const auto start = std::chrono::steady_clock::now();
  const Trace trace = run_schedule(game, rule, schedule, strict);
  const auto stop = std::chrono::steady_clock::now();

  if (!trace_path.empty()) write_trace_csv(trace, trace_path);

  ExperimentRow row;
  row.n = game.n();
  row.eps = rule.eps.str();
  row.rule = variant_name(rule.variant);
  row.initial_bad = trace.initial_bad;
  row.final_bad = trace.final_bad;
  row.pou = trace.initial_bad > 0 ? price_of_uncertainty(trace)
                                  : std::numeric_limits<double>::quiet_NaN();
  row.moves = static_cast<long long>(trace.moves.size());
  row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();

  if (csv) {
    std::cout << experiment_csv_header() << "\n" << experiment_csv_row(row) << "\n";
  } else {
    std::cout << "initial_bad=" << row.initial_bad << " final_bad=" << row.final_bad
              << " moves=" << row.moves;
    if (row.initial_bad > 0) std::cout << " pou=" << std::setprecision(15) << row.pou;
    std::cout << "\n";
  }
  return 0;
}

int cmd_oracle(const std::string& instance, const std::string& eps_text,
               const std::string& rule_text, long long state_limit) {
  const ConsensusGame game = read_instance(instance);
  const UncertaintyRule rule = rule_from(eps_text, rule_text);
  const OracleResult result = bfs_oracle_max_bad_edges(game, rule, state_limit);
  std::cout << "max_bad=" << result.max_bad << " states=" << result.states << " witness=";
  for (size_t i = 0; i < result.witness.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << result.witness[i];
  }
  std::cout << "\n";
  return 0;
}

int cmd_verify(const std::string& instance, const std::string& eps_text,
               const std::string& rule_text, const std::vector<std::string>& schedule_paths,
               bool strict) {
  const ConsensusGame initial = read_instance(instance);
  const UncertaintyRule rule = rule_from(eps_text, rule_text);
  const std::vector<int> schedule = load_schedules(schedule_paths);

  ConsensusGame replay = initial;
  const Trace trace = run_schedule(replay, rule, schedule, strict);
  const ChainReport report = verify_upper_bound_chain(initial, trace, rule);
  const ShadowTrace shadow = extract_Ek_trace(initial, trace, rule);
  const MonovariantReport mono = check_monovariants(reversed_steps_of(shadow), rule.eps_hat());

  std::cout << chain_report_to_json(report, mono);
  if (!report.violations.empty() || !mono.violations.empty()) {
    std::cerr << "error: verification failed\n";
    return 2;
  }
  return 0;
}

int cmd_sweep(const std::vector<int>& ns, const std::vector<std::string>& eps_texts,
              const std::string& rule_text, const std::string& csv_path) {
  std::vector<Rational> epss;
  epss.reserve(eps_texts.size());
  for (const std::string& text : eps_texts) epss.push_back(Rational::parse(text));
  const Variant variant = variant_from_name(rule_text);

  const SweepResult result = sweep(ns, epss, variant);

  std::ostringstream csv;
  csv << experiment_csv_header() << "\n";
  for (const ExperimentRow& row : result.rows) csv << experiment_csv_row(row) << "\n";
  if (csv_path.empty())
    std::cout << csv.str();
  else
    write_text_file(csv_path, csv.str());

  for (const std::string& note : result.notes) std::cout << "# note: " << note << "\n";
  for (const auto& [label, fit] : result.fits)
    std::cout << "# fit: " << label << " exponent=" << std::setprecision(6) << fit.exponent
              << " r2=" << fit.r2 << "\n";
  return 0;
}

int cmd_bound(long long m, const std::string& eps_text, double sum_e0, double sum_e0_sq) {
  const Rational eps = Rational::parse(eps_text);
  std::cout << std::setprecision(15) << sum_alpha_bound(m, eps.to_double(), sum_e0, sum_e0_sq)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uncertain best-response dynamics on consensus games"};
  app.require_subcommand(1);

  int gen_n = 0;
  std::string gen_eps, gen_out;
  auto* gen = app.add_subcommand("generate", "build a layered instance plus its schedules");
  gen->add_option("--n", gen_n, "vertex budget")->required();
  gen->add_option("--eps", gen_eps, "uncertainty as p/q")->required();
  gen->add_option("--out", gen_out, "output directory")->required();

  std::string sim_instance, sim_eps, sim_trace;
  std::string sim_rule = "two-sided";
  std::vector<std::string> sim_schedules;
  bool sim_strict = false, sim_csv = false;
  auto* sim = app.add_subcommand("simulate", "run schedules on an instance");
  sim->add_option("--instance", sim_instance, "instance json")->required();
  sim->add_option("--eps", sim_eps, "uncertainty as p/q")->required();
  sim->add_option("--rule", sim_rule, "one-sided | two-sided | half-degree")
      ->capture_default_str();
  sim->add_option("--schedule", sim_schedules, "schedule file (repeatable, run in order)");
  sim->add_flag("--strict", sim_strict, "also assert the responder-set coverage invariant");
  sim->add_option("--trace", sim_trace, "write the move trace as csv");
  sim->add_flag("--csv", sim_csv, "print the summary as a csv row");

  std::string ora_instance, ora_eps;
  std::string ora_rule = "two-sided";
  long long ora_limit = 5000000;
  auto* ora = app.add_subcommand("oracle", "exhaustive max bad edges, n <= 24");
  ora->add_option("--instance", ora_instance, "instance json")->required();
  ora->add_option("--eps", ora_eps, "uncertainty as p/q")->required();
  ora->add_option("--rule", ora_rule, "one-sided | two-sided | half-degree")
      ->capture_default_str();
  ora->add_option("--state-limit", ora_limit, "abort after this many states")
      ->capture_default_str();

  std::string ver_instance, ver_eps;
  std::string ver_rule = "two-sided";
  std::vector<std::string> ver_schedules;
  bool ver_strict = false;
  auto* ver = app.add_subcommand("verify", "run schedules and check the upper-bound chain");
  ver->add_option("--instance", ver_instance, "instance json")->required();
  ver->add_option("--eps", ver_eps, "uncertainty as p/q")->required();
  ver->add_option("--rule", ver_rule, "one-sided | two-sided | half-degree")
      ->capture_default_str();
  ver->add_option("--schedule", ver_schedules, "schedule file (repeatable, run in order)")
      ->required();
  ver->add_flag("--strict", ver_strict, "also assert the responder-set coverage invariant");

  std::vector<int> sweep_ns;
  std::vector<std::string> sweep_eps;
  std::string sweep_rule = "two-sided", sweep_csv;
  auto* swp = app.add_subcommand("sweep", "run a grid of (n, eps) experiments");
  swp->add_option("--n", sweep_ns, "vertex budget (repeatable)")->required();
  swp->add_option("--eps", sweep_eps, "uncertainty as p/q (repeatable)")->required();
  swp->add_option("--rule", sweep_rule, "one-sided | two-sided | half-degree")
      ->capture_default_str();
  swp->add_option("--csv", sweep_csv, "write rows to this file instead of stdout");

  long long bnd_m = 0;
  std::string bnd_eps;
  double bnd_e0 = 0, bnd_e0_sq = 0;
  auto* bnd = app.add_subcommand("bound", "print the response budget bound");
  bnd->add_option("--m", bnd_m, "number of responses")->required();
  bnd->add_option("--eps", bnd_eps, "inflation used literally in the formula, as p/q")->required();
  bnd->add_option("--sum-e0", bnd_e0, "initial element sum")->capture_default_str();
  bnd->add_option("--sum-e0-sq", bnd_e0_sq, "initial sum of squares")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return cmd_generate(gen_n, gen_eps, gen_out);
    if (sim->parsed())
      return cmd_simulate(sim_instance, sim_eps, sim_rule, sim_schedules, sim_strict, sim_trace,
                          sim_csv);
    if (ora->parsed()) return cmd_oracle(ora_instance, ora_eps, ora_rule, ora_limit);
    if (ver->parsed()) return cmd_verify(ver_instance, ver_eps, ver_rule, ver_schedules, ver_strict);
    if (swp->parsed()) return cmd_sweep(sweep_ns, sweep_eps, sweep_rule, sweep_csv);
    if (bnd->parsed()) return cmd_bound(bnd_m, bnd_eps, bnd_e0, bnd_e0_sq);
  } catch (const pou::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    switch (ex.cls) {
      case pou::ErrorClass::Violation: return 2;
      case pou::ErrorClass::Infeasible: return 3;
      case pou::ErrorClass::Usage: return 1;
    }
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
