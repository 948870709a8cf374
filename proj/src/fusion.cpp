#include "byzdet/fusion.hpp"

#include <algorithm>
#include <cmath>

#include "byzdet/detection.hpp"

namespace byzdet {

namespace {

double attack_flip_mass(const NetworkConfig& c) {
  return c.attack.alpha * (c.attack.p10 + c.attack.p01);
}

int clamp_rule_k(double k_real, int n) {
  if (std::isnan(k_real)) throw validation_error("MAP threshold is undefined");
  if (k_real < 0.0) return 0;
  if (k_real > n + 1.0) return n + 1;
  return static_cast<int>(k_real);
}

// MAP rule when reports carry no hypothesis information: decide from priors.
FusionRule prior_rule(const NetworkConfig& c) {
  return c.priors.p1 >= c.priors.p0 ? FusionRule{0, Polarity::Normal}
                                    : FusionRule{c.n + 1, Polarity::Normal};
}

// Threshold for the informative regime (pi11 > pi10):
//   K* = ln[(p0/p1)((1-pi10)/(1-pi11))^n] / ln[pi11(1-pi10)/(pi10(1-pi11))]
double threshold_normal(const NetworkConfig& c, const Marginals& m) {
  const double num = std::log(c.priors.p0 / c.priors.p1) +
                     c.n * (std::log1p(-m.pi10) - std::log1p(-m.pi11));
  const double den = std::log(m.pi11) - std::log(m.pi10) +
                     std::log1p(-m.pi10) - std::log1p(-m.pi11);
  return num / den;
}

// Threshold for the anti-informative regime (pi11 < pi10); H1 below it.
double threshold_inverted(const NetworkConfig& c, const Marginals& m) {
  const double num = std::log(c.priors.p1 / c.priors.p0) +
                     c.n * (std::log1p(-m.pi11) - std::log1p(-m.pi10));
  const double den = std::log(m.pi10) - std::log(m.pi11) +
                     std::log1p(-m.pi11) - std::log1p(-m.pi10);
  return num / den;
}

bool interior(double p) { return p > 0.0 && p < 1.0; }

// Degenerate marginals make some counts impossible, so the MAP rule follows
// directly from the one report value that still discriminates.
FusionRule degenerate_corner_rule(const NetworkConfig& c, const Marginals& m) {
  const double log_prior_odds = std::log(c.priors.p0 / c.priors.p1);
  if (m.pi11 > m.pi10) {
    if (m.pi10 <= 0.0 && m.pi11 >= 1.0) return {1, Polarity::Normal};
    if (m.pi10 <= 0.0) {
      // count >= 1 is conclusive for H1; count == 0 compares (1-pi11)^n to the odds
      const bool h1_at_zero = c.n * std::log1p(-m.pi11) >= log_prior_odds;
      return {h1_at_zero ? 0 : 1, Polarity::Normal};
    }
    // pi11 >= 1: count < n is conclusive for H0
    const bool h1_at_n = -c.n * std::log(m.pi10) >= log_prior_odds;
    return {h1_at_n ? c.n : c.n + 1, Polarity::Normal};
  }
  if (m.pi10 >= 1.0 && m.pi11 <= 0.0) return {1, Polarity::Inverted};
  if (m.pi10 >= 1.0) {
    // count < n is conclusive for H1; count == n compares pi11^n to the odds
    const bool h1_at_n = c.n * std::log(m.pi11) >= log_prior_odds;
    return {h1_at_n ? c.n + 1 : c.n, Polarity::Inverted};
  }
  // pi11 <= 0: count >= 1 is conclusive for H0
  const bool h1_at_zero = -c.n * std::log1p(-m.pi10) >= log_prior_odds;
  return {h1_at_zero ? 1 : 0, Polarity::Inverted};
}

}  // namespace

FusionRule majority_rule(int n) {
  if (n < 1) throw validation_error("majority rule requires n >= 1");
  return {(n + 2) / 2, Polarity::Normal};
}

double map_threshold(const NetworkConfig& cfg) {
  const NetworkConfig c = checked(cfg);
  const Marginals m = marginals(c.attack, c.sensor);
  if (!interior(m.pi10) || !interior(m.pi11)) {
    throw validation_error("MAP threshold requires marginals strictly inside (0,1)");
  }
  if (std::abs(m.pi11 - m.pi10) < kBlindTolerance) {
    throw validation_error("MAP threshold is undefined at the blinding point");
  }
  return m.pi11 > m.pi10 ? threshold_normal(c, m) : threshold_inverted(c, m);
}

FusionRule optimal_fusion_rule(const NetworkConfig& cfg) {
  const NetworkConfig c = checked(cfg);
  const Marginals m = marginals(c.attack, c.sensor);
  if (std::abs(attack_flip_mass(c) - 1.0) <= kBlindTolerance) return prior_rule(c);
  if (!interior(m.pi10) || !interior(m.pi11)) return degenerate_corner_rule(c, m);
  if (m.pi11 > m.pi10) {
    return {clamp_rule_k(std::ceil(threshold_normal(c, m)), c.n), Polarity::Normal};
  }
  return {clamp_rule_k(std::floor(threshold_inverted(c, m)) + 1.0, c.n), Polarity::Inverted};
}

RuleSearchResult brute_force_rule_search(const NetworkConfig& cfg) {
  const NetworkConfig c = checked(cfg);
  const Marginals m = marginals(c.attack, c.sensor);
  RuleSearchResult result;
  result.pe_by_k.reserve(2 * (c.n + 2));
  for (Polarity pol : {Polarity::Normal, Polarity::Inverted}) {
    for (int k = 0; k <= c.n + 1; ++k) {
      const FusionRule rule{k, pol};
      const auto [qf, qd] = global_probs(m, c.n, rule);
      const double pe = c.priors.p0 * qf + c.priors.p1 * (1.0 - qd);
      result.pe_by_k.emplace_back(rule, pe);
    }
  }
  result.best_rule = result.pe_by_k.front().first;
  result.best_pe = result.pe_by_k.front().second;
  for (const auto& [rule, pe] : result.pe_by_k) {
    if (pe < result.best_pe) {
      result.best_pe = pe;
      result.best_rule = rule;
    }
  }
  return result;
}

SandwichBounds sandwich_bounds(const NetworkConfig& cfg) {
  const NetworkConfig c = checked(cfg);
  if (attack_flip_mass(c) >= 1.0) {
    throw validation_error("sandwich bounds require alpha*(p10+p01) < 1");
  }
  const Marginals m = marginals(c.attack, c.sensor);
  if (!interior(m.pi10) || !interior(m.pi11)) {
    throw validation_error("sandwich bounds require marginals strictly inside (0,1)");
  }
  const double den = std::log(m.pi11) - std::log(m.pi10) +
                     std::log1p(-m.pi10) - std::log1p(-m.pi11);
  const double base = std::log(c.priors.p0 / c.priors.p1) +
                      c.n * (std::log1p(-m.pi10) - std::log1p(-m.pi11)) -
                      (std::log(m.pi10) - std::log(m.pi11));
  SandwichBounds bounds;
  bounds.a = (base + std::log1p(-c.sensor.pf) - std::log1p(-c.sensor.pd)) / den;
  bounds.b = (base + std::log(c.sensor.pf) - std::log(c.sensor.pd)) / den;
  return bounds;
}

}  // namespace byzdet
