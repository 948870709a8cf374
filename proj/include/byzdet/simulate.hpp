#pragma once

#include <cstdint>

#include "byzdet/types.hpp"

namespace byzdet {

/// How Byzantine nodes are placed each trial: independently with probability
/// alpha per node, or exactly round(alpha*N) nodes chosen uniformly.
enum class ByzantinePlacement { BernoulliPerNode, FixedCount };

struct SimConfig {
  NetworkConfig network;
  FusionRule rule;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  ByzantinePlacement placement = ByzantinePlacement::BernoulliPerNode;
};

struct SimResult {
  double empirical_pe = 0.0;
  double empirical_qf = 0.0;
  double empirical_qd = 0.0;
  double std_error = 0.0;  ///< sqrt(pe*(1-pe)/trials) for the error estimate
  std::uint64_t trials_h0 = 0;
  std::uint64_t trials_h1 = 0;
  // Raw decision counts; the aggregation is exact, so two runs agree iff
  // these agree.
  std::uint64_t decide_h1_under_h0 = 0;
  std::uint64_t decide_h1_under_h1 = 0;
};

bool operator==(const SimResult& a, const SimResult& b);

/// Simulates the star network trial by trial. Trials are processed in
/// fixed-size blocks, each with its own RNG substream keyed on (seed, block),
/// and only integer counts are merged, so the result is identical for a
/// given (seed, config) across runs and thread counts.
SimResult simulate(const SimConfig& cfg);

/// Serial reference walking the same substreams; kept for testing and
/// benchmarking against the parallel path.
SimResult simulate_reference(const SimConfig& cfg);

/// Closed-form vs. empirical comparison for one configuration.
struct ValidationReport {
  ErrorReport analytic;
  SimResult sim;
  double z_pe = 0.0;
  double z_qf = 0.0;
  double z_qd = 0.0;
  bool flagged = false;  ///< any |z| > 3
};

/// Runs the simulator and scores it against the closed forms. Requires
/// BernoulliPerNode placement (the regime the marginal formulas describe).
ValidationReport validate_against_closed_form(const SimConfig& cfg);

}  // namespace byzdet
