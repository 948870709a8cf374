#include "byzdet/detection.hpp"

#include <algorithm>
#include <cmath>

#include "byzdet/binomial.hpp"

namespace byzdet {

namespace {

// n * C(n-1, k-1) * p^(k-1) * (1-p)^(n-k), evaluated through logs.
// Exponents of zero bases are resolved exactly (x^0 == 1).
double count_weight(int n, int k, double p) {
  if ((p <= 0.0 && k > 1) || (p >= 1.0 && k < n)) return 0.0;
  double lg = std::log(static_cast<double>(n)) + log_choose(n - 1, k - 1);
  if (k > 1) lg += (k - 1) * std::log(p);
  if (k < n) lg += (n - k) * std::log1p(-p);
  return std::exp(lg);
}

void require_interior(const Marginals& m) {
  if (m.pi10 <= 0.0 || m.pi10 >= 1.0 || m.pi11 <= 0.0 || m.pi11 >= 1.0) {
    throw validation_error("operation requires marginals strictly inside (0,1)");
  }
}

void require_derivative_rule(int k, int n) {
  if (k < 1 || k > n) {
    throw validation_error("derivative requires a Normal rule with k in [1, n]");
  }
}

}  // namespace

Marginals marginals(const AttackConfig& attack, const SensorModel& sensor) {
  const AttackConfig a = checked(attack);
  const SensorModel s = checked(sensor);
  Marginals m;
  m.pi10 = a.alpha * (a.p10 * (1.0 - s.pf) + (1.0 - a.p01) * s.pf) + (1.0 - a.alpha) * s.pf;
  m.pi11 = a.alpha * (a.p10 * (1.0 - s.pd) + (1.0 - a.p01) * s.pd) + (1.0 - a.alpha) * s.pd;
  m.pi10 = std::clamp(m.pi10, 0.0, 1.0);
  m.pi11 = std::clamp(m.pi11, 0.0, 1.0);
  return m;
}

std::pair<double, double> global_probs(const Marginals& m, int n, const FusionRule& rule) {
  const FusionRule r = checked(rule, n);
  if (r.polarity == Polarity::Normal) {
    return {binomial_tail_ge(n, r.k, m.pi10), binomial_tail_ge(n, r.k, m.pi11)};
  }
  return {binomial_cdf_lt(n, r.k, m.pi10), binomial_cdf_lt(n, r.k, m.pi11)};
}

double local_error(const AttackConfig& attack, const SensorModel& sensor,
                   const Priors& priors) {
  const Priors p = checked(priors);
  const Marginals m = marginals(attack, sensor);
  return p.p0 * m.pi10 + p.p1 * (1.0 - m.pi11);
}

ErrorReport system_error(const NetworkConfig& cfg, const FusionRule& rule) {
  const NetworkConfig c = checked(cfg);
  ErrorReport report;
  report.marginals = marginals(c.attack, c.sensor);
  const auto [qf, qd] = global_probs(report.marginals, c.n, rule);
  report.qf = qf;
  report.qd = qd;
  report.pe_local = c.priors.p0 * report.marginals.pi10 + c.priors.p1 * (1.0 - report.marginals.pi11);
  report.pe_system = c.priors.p0 * qf + c.priors.p1 * (1.0 - qd);
  return report;
}

std::pair<double, double> d_pe_local(const AttackConfig& attack,
                                     const SensorModel& sensor, const Priors& priors) {
  const AttackConfig a = checked(attack);
  const SensorModel s = checked(sensor);
  const Priors p = checked(priors);
  const double d10 = p.p0 * a.alpha * (1.0 - s.pf) - p.p1 * a.alpha * (1.0 - s.pd);
  const double d01 = -p.p0 * a.alpha * s.pf + p.p1 * a.alpha * s.pd;
  return {d10, d01};
}

double d_pE_dP10(const NetworkConfig& cfg, int k) {
  const NetworkConfig c = checked(cfg);
  require_derivative_rule(k, c.n);
  const Marginals m = marginals(c.attack, c.sensor);
  return c.priors.p0 * c.attack.alpha * (1.0 - c.sensor.pf) * count_weight(c.n, k, m.pi10) -
         c.priors.p1 * c.attack.alpha * (1.0 - c.sensor.pd) * count_weight(c.n, k, m.pi11);
}

double d_pE_dP01(const NetworkConfig& cfg, int k) {
  const NetworkConfig c = checked(cfg);
  require_derivative_rule(k, c.n);
  const Marginals m = marginals(c.attack, c.sensor);
  return c.priors.p1 * c.attack.alpha * c.sensor.pd * count_weight(c.n, k, m.pi11) -
         c.priors.p0 * c.attack.alpha * c.sensor.pf * count_weight(c.n, k, m.pi10);
}

double r_p10(const NetworkConfig& cfg, int k) {
  const NetworkConfig c = checked(cfg);
  require_derivative_rule(k, c.n);
  const Marginals m = marginals(c.attack, c.sensor);
  require_interior(m);
  return std::log(c.priors.p0 / c.priors.p1 * (1.0 - c.sensor.pf) / (1.0 - c.sensor.pd)) +
         (k - 1) * std::log(m.pi10 / m.pi11) +
         (c.n - k) * std::log((1.0 - m.pi10) / (1.0 - m.pi11));
}

double r_p01(const NetworkConfig& cfg, int k) {
  const NetworkConfig c = checked(cfg);
  require_derivative_rule(k, c.n);
  const Marginals m = marginals(c.attack, c.sensor);
  require_interior(m);
  return std::log(c.priors.p1 / c.priors.p0 * c.sensor.pd / c.sensor.pf) +
         (k - 1) * std::log(m.pi11 / m.pi10) +
         (c.n - k) * std::log((1.0 - m.pi11) / (1.0 - m.pi10));
}

}  // namespace byzdet
