#pragma once

#include <utility>
#include <vector>

#include "byzdet/types.hpp"

namespace byzdet {

/// Full rule-search table: every k in [0, n+1] under both polarities, plus
/// the argmin. Ties break toward smaller k, Normal before Inverted.
struct RuleSearchResult {
  FusionRule best_rule;
  double best_pe = 1.0;
  std::vector<std::pair<FusionRule, double>> pe_by_k;
};

/// Thresholds bracketing the optimal rule: b < ceil(K*) < a in the
/// below-blinding regime.
struct SandwichBounds {
  double a = 0.0;
  double b = 0.0;
};

/// Majority rule k = ceil((n+1)/2), Normal polarity.
FusionRule majority_rule(int n);

/// Raw MAP count threshold K* for the current regime (Normal form for
/// alpha*(p10+p01) < 1, Inverted form above). Requires marginals strictly
/// inside (0,1) and away from the blinding point.
double map_threshold(const NetworkConfig& cfg);

/// MAP-optimal fusion rule.
///   alpha*(p10+p01) < 1: Normal, k = clamp(ceil(K*), 0, n+1)
///   alpha*(p10+p01) > 1: Inverted, k = clamp(floor(K*)+1, 0, n+1)
///   blinding point (within 1e-12): degenerate prior rule, k=0 Normal when
///   p1 >= p0 else k=n+1 Normal.
FusionRule optimal_fusion_rule(const NetworkConfig& cfg);

/// Exhaustive evaluation of system_error over every rule; the independent
/// oracle for optimal_fusion_rule.
RuleSearchResult brute_force_rule_search(const NetworkConfig& cfg);

/// The two K thresholds between which the system error is increasing in p10
/// and in p01. Requires alpha*(p10+p01) < 1 and non-degenerate marginals.
SandwichBounds sandwich_bounds(const NetworkConfig& cfg);

}  // namespace byzdet
