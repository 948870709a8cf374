#include "byzdet/types.hpp"

#include <cmath>

namespace byzdet {

double checked_probability(double value, const char* name) {
  if (!std::isfinite(value) || value < -kProbabilityTolerance ||
      value > 1.0 + kProbabilityTolerance) {
    throw validation_error(std::string(name) + " must lie in [0,1], got " +
                           std::to_string(value));
  }
  if (value < 0.0) return 0.0;
  if (value > 1.0) return 1.0;
  return value;
}

SensorModel checked(const SensorModel& s) {
  SensorModel out;
  out.pd = checked_probability(s.pd, "pd");
  out.pf = checked_probability(s.pf, "pf");
  if (!(out.pd > out.pf)) {
    throw validation_error("sensor requires pf < pd strictly, got pd=" +
                           std::to_string(out.pd) + " pf=" + std::to_string(out.pf));
  }
  return out;
}

Priors checked(const Priors& p) {
  Priors out;
  out.p0 = checked_probability(p.p0, "p0");
  out.p1 = checked_probability(p.p1, "p1");
  if (std::abs(out.p0 + out.p1 - 1.0) > kProbabilityTolerance) {
    throw validation_error("priors must sum to 1, got p0+p1=" +
                           std::to_string(out.p0 + out.p1));
  }
  if (out.p0 <= 0.0 || out.p0 >= 1.0 || out.p1 <= 0.0 || out.p1 >= 1.0) {
    throw validation_error("priors must lie strictly inside (0,1)");
  }
  return out;
}

AttackConfig checked(const AttackConfig& a) {
  AttackConfig out;
  out.alpha = checked_probability(a.alpha, "alpha");
  out.p10 = checked_probability(a.p10, "p10");
  out.p01 = checked_probability(a.p01, "p01");
  return out;
}

NetworkConfig checked(const NetworkConfig& c) {
  if (c.n < 1) throw validation_error("n must be >= 1, got " + std::to_string(c.n));
  NetworkConfig out;
  out.n = c.n;
  out.sensor = checked(c.sensor);
  out.priors = checked(c.priors);
  out.attack = checked(c.attack);
  return out;
}

FusionRule checked(const FusionRule& rule, int n) {
  if (rule.k < 0 || rule.k > n + 1) {
    throw validation_error("fusion rule k must lie in [0, n+1], got k=" +
                           std::to_string(rule.k) + " with n=" + std::to_string(n));
  }
  return rule;
}

const char* polarity_name(Polarity p) {
  return p == Polarity::Normal ? "normal" : "inverted";
}

Polarity polarity_from_name(const std::string& name) {
  if (name == "normal") return Polarity::Normal;
  if (name == "inverted") return Polarity::Inverted;
  throw validation_error("unknown polarity '" + name + "' (expected normal|inverted)");
}

}  // namespace byzdet
