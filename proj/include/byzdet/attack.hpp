#pragma once

#include <optional>
#include <vector>

#include "byzdet/types.hpp"

namespace byzdet {

/// Knowledge scenarios: the attacker knows nothing about the fusion rule,
/// knows the FC runs the majority rule, or faces an FC that best-responds
/// with the MAP-optimal rule.
enum class AttackScenario { FusionRuleUnaware, MajorityRuleAware, StrategyAwareFC };

struct FlipPair {
  double p10 = 0.0;
  double p01 = 0.0;
};

/// One or more maximizing strategies for a scenario. `achieved_objective` is
/// the scenario's objective value at the listed strategies when a full
/// configuration is available; every listed strategy attains it within 1e-9.
/// `guaranteed` is false when the result was computed outside the regime the
/// corner theorem covers (majority scenario with Assumption 1 violated).
struct StrategySet {
  std::vector<FlipPair> strategies;
  std::optional<double> achieved_objective;
  bool unique = true;
  bool guaranteed = true;
};

/// Minimum Byzantine fraction 1/(p10+p01) that blinds the FC, or nullopt
/// when that exceeds 1 (infeasible, including p10=p01=0).
std::optional<double> blinding_fraction(double p10, double p01);

/// True when the report marginals coincide (|pi11 - pi10| < 1e-12), i.e. the
/// received data is independent of the hypothesis.
bool is_blind(const AttackConfig& attack, const SensorModel& sensor);

/// Maximizer(s) of the local error over the flip-probability square. The
/// corner follows the signs of the d_pe_local components and is independent
/// of alpha; alpha only scales the objective value reported. On a boundary
/// equality the whole indifferent edge is returned in 0.1 steps.
StrategySet optimal_local_attack(const SensorModel& sensor, const Priors& priors,
                                 double alpha = 1.0);

/// alpha < min(0.5 - pf, 1 - m/pd) with m = n/(2n-2); requires n >= 2.
bool assumption_holds(int n, const SensorModel& sensor, double alpha);

/// Maximizer(s) of the system error under the majority rule among the
/// corners (1,0), (0,1), (1,1). When Assumption 1 fails (or n < 2) the
/// corners are still evaluated but the result carries guaranteed=false.
StrategySet optimal_majority_attack(int n, const SensorModel& sensor,
                                    const Priors& priors, double alpha);

/// Maximizer(s) of min_K P_E against a best-responding FC: (1,1) for
/// alpha <= 0.5; the blinding line alpha*(p10+p01) = 1 above, reported as
/// the canonical midpoint (1/(2*alpha), 1/(2*alpha)) plus the segment
/// endpoints.
StrategySet optimal_strategy_aware_attack(double alpha);

/// Routes a scenario to its optimizer and fills achieved_objective from cfg
/// (min_K P_E via brute-force rule search for StrategyAwareFC).
StrategySet dispatch(AttackScenario scenario, const NetworkConfig& cfg);

}  // namespace byzdet
