#include "byzdet/attack.hpp"

#include <algorithm>
#include <cmath>

#include "byzdet/detection.hpp"
#include "byzdet/fusion.hpp"

namespace byzdet {

namespace {

constexpr double kTieTolerance = 1e-9;

std::vector<double> edge_steps() {
  std::vector<double> v;
  for (int i = 0; i <= 10; ++i) v.push_back(i * 0.1);
  v.back() = 1.0;
  return v;
}

}  // namespace

std::optional<double> blinding_fraction(double p10, double p01) {
  const double a = checked_probability(p10, "p10");
  const double b = checked_probability(p01, "p01");
  const double sum = a + b;
  if (sum <= 0.0) return std::nullopt;
  const double alpha = 1.0 / sum;
  if (alpha > 1.0) return std::nullopt;
  return alpha;
}

bool is_blind(const AttackConfig& attack, const SensorModel& sensor) {
  const Marginals m = marginals(attack, sensor);
  return std::abs(m.pi11 - m.pi10) < kBlindTolerance;
}

StrategySet optimal_local_attack(const SensorModel& sensor, const Priors& priors,
                                 double alpha) {
  const SensorModel s = checked(sensor);
  const Priors p = checked(priors);
  const double a = checked_probability(alpha, "alpha");

  // Signs of the local-error slopes with the common alpha factor removed.
  const double slope10 = p.p0 * (1.0 - s.pf) - p.p1 * (1.0 - s.pd);
  const double slope01 = p.p1 * s.pd - p.p0 * s.pf;

  const auto component = [](double slope) -> std::vector<double> {
    if (slope > kProbabilityTolerance) return {1.0};
    if (slope < -kProbabilityTolerance) return {0.0};
    return edge_steps();  // boundary equality: the attacker is indifferent
  };
  const std::vector<double> c10 = component(slope10);
  const std::vector<double> c01 = component(slope01);

  StrategySet result;
  for (double v10 : c10)
    for (double v01 : c01) result.strategies.push_back({v10, v01});
  result.achieved_objective =
      local_error({a, result.strategies.front().p10, result.strategies.front().p01}, s, p);
  result.unique = result.strategies.size() == 1 && a > 0.0;
  return result;
}

bool assumption_holds(int n, const SensorModel& sensor, double alpha) {
  if (n < 2) throw validation_error("Assumption bound needs n >= 2 (m undefined at n=1)");
  const SensorModel s = checked(sensor);
  const double a = checked_probability(alpha, "alpha");
  const double m = n / (2.0 * n - 2.0);
  return a < std::min(0.5 - s.pf, 1.0 - m / s.pd);
}

StrategySet optimal_majority_attack(int n, const SensorModel& sensor,
                                    const Priors& priors, double alpha) {
  const FusionRule rule = majority_rule(n);
  const FlipPair corners[] = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};

  double best = -1.0;
  double pe[3];
  for (int i = 0; i < 3; ++i) {
    const NetworkConfig cfg{n, sensor, priors, {alpha, corners[i].p10, corners[i].p01}};
    pe[i] = system_error(cfg, rule).pe_system;
    best = std::max(best, pe[i]);
  }

  StrategySet result;
  for (int i = 0; i < 3; ++i) {
    if (pe[i] >= best - kTieTolerance) result.strategies.push_back(corners[i]);
  }
  result.achieved_objective = best;
  result.unique = result.strategies.size() == 1;
  result.guaranteed = n >= 2 && assumption_holds(n, sensor, alpha);
  return result;
}

StrategySet optimal_strategy_aware_attack(double alpha) {
  const double a = checked_probability(alpha, "alpha");
  StrategySet result;
  if (a <= 0.5) {
    result.strategies.push_back({1.0, 1.0});
    result.unique = true;
    return result;
  }
  // Every point of the segment p10+p01 = 1/alpha inside the unit square
  // blinds the FC; report the midpoint and the segment endpoints.
  const double sum = 1.0 / a;
  const double hi = std::min(1.0, sum);
  result.strategies.push_back({sum / 2.0, sum / 2.0});
  result.strategies.push_back({hi, sum - hi});
  result.strategies.push_back({sum - hi, hi});
  result.unique = false;
  return result;
}

StrategySet dispatch(AttackScenario scenario, const NetworkConfig& cfg) {
  const NetworkConfig c = checked(cfg);
  switch (scenario) {
    case AttackScenario::FusionRuleUnaware:
      return optimal_local_attack(c.sensor, c.priors, c.attack.alpha);
    case AttackScenario::MajorityRuleAware:
      return optimal_majority_attack(c.n, c.sensor, c.priors, c.attack.alpha);
    case AttackScenario::StrategyAwareFC: {
      StrategySet result = optimal_strategy_aware_attack(c.attack.alpha);
      NetworkConfig at = c;
      at.attack.p10 = result.strategies.front().p10;
      at.attack.p01 = result.strategies.front().p01;
      result.achieved_objective = brute_force_rule_search(at).best_pe;
      return result;
    }
  }
  throw validation_error("unknown attack scenario");
}

}  // namespace byzdet
