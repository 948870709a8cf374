// byzdet command-line front end: scenario evaluation (analyze), grid sweeps
// (sweep), optimal attack strategies (attack), Monte Carlo validation
// (simulate), and the critical blinding power (blind). Scalar reports are
// JSON, surfaces are CSV. Exit codes: 0 success, 2 validation error,
// 3 internal failure.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "byzdet/attack.hpp"
#include "byzdet/detection.hpp"
#include "byzdet/fusion.hpp"
#include "byzdet/simulate.hpp"
#include "byzdet/sweep.hpp"
#include "byzdet/types.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Options {
  int n = 10;
  double pd = 0.8;
  double pf = 0.1;
  double p0 = 0.5;
  double alpha = 0.0;
  double p10 = 0.0;
  double p01 = 0.0;
  int rule_k = 0;
  std::string rule_polarity = "normal";
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::string placement = "bernoulli";
  double step = 0.01;
  std::string out;

  std::string scenario = "local";
  std::string objective = "local";
  std::string axis1 = "p10";
  std::string axis2 = "p01";
  double axis1_min = 0.0, axis1_max = 1.0;
  double axis2_min = 0.0, axis2_max = 1.0;

  bool rule_given = false;

  byzdet::NetworkConfig network() const {
    return {n, {pd, pf}, {p0, 1.0 - p0}, {alpha, p10, p01}};
  }

  byzdet::FusionRule rule() const {
    return {rule_k, byzdet::polarity_from_name(rule_polarity)};
  }

  byzdet::ByzantinePlacement placement_mode() const {
    if (placement == "bernoulli") return byzdet::ByzantinePlacement::BernoulliPerNode;
    if (placement == "fixed") return byzdet::ByzantinePlacement::FixedCount;
    throw byzdet::validation_error("unknown placement '" + placement +
                                   "' (expected bernoulli|fixed)");
  }
};

void emit(const Options& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + opts.out);
  file << text;
}

json rule_json(const byzdet::FusionRule& rule) {
  return {{"k", rule.k}, {"polarity", byzdet::polarity_name(rule.polarity)}};
}

json inputs_json(const Options& opts) {
  return {{"n", opts.n},         {"pd", opts.pd},   {"pf", opts.pf},
          {"p0", opts.p0},       {"p1", 1.0 - opts.p0}, {"alpha", opts.alpha},
          {"p10", opts.p10},     {"p01", opts.p01}};
}

json strategy_set_json(const byzdet::StrategySet& set) {
  json strategies = json::array();
  for (const auto& s : set.strategies) {
    strategies.push_back({{"p10", s.p10}, {"p01", s.p01}});
  }
  json out{{"strategies", strategies},
           {"achieved_objective",
            set.achieved_objective ? json(*set.achieved_objective) : json(nullptr)},
           {"unique", set.unique},
           {"guaranteed", set.guaranteed}};
  return out;
}

int cmd_analyze(const Options& opts) {
  const byzdet::NetworkConfig cfg = byzdet::checked(opts.network());
  const byzdet::FusionRule optimal = byzdet::optimal_fusion_rule(cfg);
  const byzdet::FusionRule used = opts.rule_given ? opts.rule() : optimal;
  const byzdet::ErrorReport report = byzdet::system_error(cfg, used);
  const auto search = byzdet::brute_force_rule_search(cfg);
  const auto alpha_blind = byzdet::blinding_fraction(cfg.attack.p10, cfg.attack.p01);

  json out{{"inputs", inputs_json(opts)},
           {"marginals",
            {{"pi10", report.marginals.pi10}, {"pi11", report.marginals.pi11}}},
           {"rule", rule_json(used)},
           {"rule_source", opts.rule_given ? "flags" : "optimal"},
           {"qf", report.qf},
           {"qd", report.qd},
           {"pe_local", report.pe_local},
           {"pe_system", report.pe_system},
           {"optimal_rule", rule_json(optimal)},
           {"min_rule_pe", search.best_pe},
           {"blind", byzdet::is_blind(cfg.attack, cfg.sensor)},
           {"blinding_alpha", alpha_blind ? json(*alpha_blind) : json(nullptr)}};
  emit(opts, out.dump(2) + "\n");
  return 0;
}

int cmd_sweep(const Options& opts) {
  byzdet::SweepSpec spec;
  spec.base = opts.network();
  spec.axis1 = {byzdet::sweep_param_from_name(opts.axis1), opts.axis1_min, opts.axis1_max,
                opts.step};
  spec.axis2 = {byzdet::sweep_param_from_name(opts.axis2), opts.axis2_min, opts.axis2_max,
                opts.step};
  if (opts.objective == "local") {
    spec.objective = byzdet::SweepObjective::LocalError;
  } else if (opts.objective == "system") {
    spec.objective = byzdet::SweepObjective::SystemErrorAtRule;
  } else if (opts.objective == "min-rules") {
    spec.objective = byzdet::SweepObjective::MinErrorOverRules;
  } else {
    throw byzdet::validation_error("unknown objective '" + opts.objective +
                                   "' (expected local|system|min-rules)");
  }
  if (opts.rule_given) spec.rule = opts.rule();
  emit(opts, byzdet::to_csv(byzdet::evaluate_sweep(spec)));
  return 0;
}

int cmd_attack(const Options& opts) {
  byzdet::AttackScenario scenario;
  if (opts.scenario == "local") {
    scenario = byzdet::AttackScenario::FusionRuleUnaware;
  } else if (opts.scenario == "majority") {
    scenario = byzdet::AttackScenario::MajorityRuleAware;
  } else if (opts.scenario == "strategy-aware") {
    scenario = byzdet::AttackScenario::StrategyAwareFC;
  } else {
    throw byzdet::validation_error("unknown scenario '" + opts.scenario +
                                   "' (expected local|majority|strategy-aware)");
  }
  const byzdet::StrategySet set = byzdet::dispatch(scenario, opts.network());
  json out{{"scenario", opts.scenario}, {"inputs", inputs_json(opts)}};
  out.update(strategy_set_json(set));
  if (scenario == byzdet::AttackScenario::StrategyAwareFC && opts.alpha > 0.5) {
    out["line"] = {{"p10_plus_p01", 1.0 / opts.alpha}};
  }
  emit(opts, out.dump(2) + "\n");
  return 0;
}

int cmd_simulate(const Options& opts) {
  byzdet::SimConfig cfg;
  cfg.network = opts.network();
  cfg.rule = opts.rule_given ? opts.rule() : byzdet::optimal_fusion_rule(cfg.network);
  cfg.trials = opts.trials;
  cfg.seed = opts.seed;
  cfg.placement = opts.placement_mode();

  json out{{"inputs", inputs_json(opts)},
           {"rule", rule_json(cfg.rule)},
           {"trials", cfg.trials},
           {"seed", cfg.seed},
           {"placement", opts.placement}};
  if (cfg.placement == byzdet::ByzantinePlacement::BernoulliPerNode) {
    const byzdet::ValidationReport report = byzdet::validate_against_closed_form(cfg);
    out["result"] = {{"empirical_pe", report.sim.empirical_pe},
                     {"empirical_qf", report.sim.empirical_qf},
                     {"empirical_qd", report.sim.empirical_qd},
                     {"std_error", report.sim.std_error},
                     {"trials_h0", report.sim.trials_h0},
                     {"trials_h1", report.sim.trials_h1}};
    out["validation"] = {{"analytic",
                          {{"qf", report.analytic.qf},
                           {"qd", report.analytic.qd},
                           {"pe_system", report.analytic.pe_system}}},
                         {"z", {{"pe", report.z_pe}, {"qf", report.z_qf}, {"qd", report.z_qd}}},
                         {"flagged", report.flagged}};
  } else {
    const byzdet::SimResult sim = byzdet::simulate(cfg);
    out["result"] = {{"empirical_pe", sim.empirical_pe},
                     {"empirical_qf", sim.empirical_qf},
                     {"empirical_qd", sim.empirical_qd},
                     {"std_error", sim.std_error},
                     {"trials_h0", sim.trials_h0},
                     {"trials_h1", sim.trials_h1}};
    out["validation"] = nullptr;
  }
  emit(opts, out.dump(2) + "\n");
  return 0;
}

int cmd_blind(const Options& opts) {
  const auto alpha = byzdet::blinding_fraction(opts.p10, opts.p01);
  json out{{"p10", opts.p10},
           {"p01", opts.p01},
           {"feasible", alpha.has_value()},
           {"alpha_blind", alpha ? json(*alpha) : json(nullptr)}};
  emit(opts, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"Bayesian distributed detection under Byzantine data falsification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Flat key=value config file; flags take precedence");

  app.add_option("--n", opts.n, "Number of sensor nodes")->capture_default_str();
  app.add_option("--pd", opts.pd, "Per-node detection probability P(v=1|H1)")
      ->capture_default_str();
  app.add_option("--pf", opts.pf, "Per-node false alarm probability P(v=1|H0)")
      ->capture_default_str();
  app.add_option("--p0", opts.p0, "Prior P(H0); P(H1) = 1 - p0")->capture_default_str();
  app.add_option("--alpha", opts.alpha, "Byzantine fraction")->capture_default_str();
  app.add_option("--p10", opts.p10, "Byzantine flip probability P(send 1 | saw 0)")
      ->capture_default_str();
  app.add_option("--p01", opts.p01, "Byzantine flip probability P(send 0 | saw 1)")
      ->capture_default_str();
  auto* rule_k_opt =
      app.add_option("--rule-k", opts.rule_k, "Fusion count threshold (default: optimal rule)");
  app.add_option("--rule-polarity", opts.rule_polarity, "normal|inverted")
      ->capture_default_str();
  app.add_option("--trials", opts.trials, "Monte Carlo trials")->capture_default_str();
  app.add_option("--seed", opts.seed, "RNG seed")->capture_default_str();
  app.add_option("--placement", opts.placement, "bernoulli|fixed")->capture_default_str();
  app.add_option("--step", opts.step, "Sweep grid step")->capture_default_str();
  app.add_option("--out", opts.out, "Write output to a file instead of stdout");

  auto* analyze = app.add_subcommand("analyze", "Closed-form report for one configuration");
  auto* sweep = app.add_subcommand("sweep", "CSV surface over two parameters");
  sweep->add_option("--objective", opts.objective, "local|system|min-rules")
      ->capture_default_str();
  sweep->add_option("--axis1", opts.axis1, "First swept parameter")->capture_default_str();
  sweep->add_option("--axis2", opts.axis2, "Second swept parameter")->capture_default_str();
  sweep->add_option("--axis1-min", opts.axis1_min)->capture_default_str();
  sweep->add_option("--axis1-max", opts.axis1_max)->capture_default_str();
  sweep->add_option("--axis2-min", opts.axis2_min)->capture_default_str();
  sweep->add_option("--axis2-max", opts.axis2_max)->capture_default_str();
  auto* attack = app.add_subcommand("attack", "Optimal Byzantine strategy for a scenario");
  attack->add_option("--scenario", opts.scenario, "local|majority|strategy-aware")
      ->capture_default_str();
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run with closed-form validation");
  auto* blind = app.add_subcommand("blind", "Critical Byzantine fraction for a flip pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err{{"error", {{"type", "validation"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
  }
  opts.rule_given = rule_k_opt->count() > 0;

  try {
    if (analyze->parsed()) return cmd_analyze(opts);
    if (sweep->parsed()) return cmd_sweep(opts);
    if (attack->parsed()) return cmd_attack(opts);
    if (simulate->parsed()) return cmd_simulate(opts);
    if (blind->parsed()) return cmd_blind(opts);
    throw byzdet::validation_error("no subcommand given");
  } catch (const byzdet::validation_error& e) {
    json err{{"error", {{"type", "validation"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err{{"error", {{"type", "internal"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 3;
  }
}
