#pragma once

#include <utility>

#include "byzdet/types.hpp"

namespace byzdet {

/// Report marginals after mixing honest and Byzantine behavior:
///   pi10 = alpha*(p10*(1-pf) + (1-p01)*pf) + (1-alpha)*pf
///   pi11 = alpha*(p10*(1-pd) + (1-p01)*pd) + (1-alpha)*pd
Marginals marginals(const AttackConfig& attack, const SensorModel& sensor);

/// Global (Q_F, Q_D) for a count-threshold rule over n i.i.d. reports.
/// Normal sums the upper tail i=k..n; Inverted sums i=0..k-1.
std::pair<double, double> global_probs(const Marginals& m, int n, const FusionRule& rule);

/// Per-report Bayesian error as seen by the fusion center:
/// p0*pi10 + p1*(1-pi11).
double local_error(const AttackConfig& attack, const SensorModel& sensor,
                   const Priors& priors);

/// Full closed-form report for one configuration and rule;
/// pe_system = p0*qf + p1*(1-qd).
ErrorReport system_error(const NetworkConfig& cfg, const FusionRule& rule);

/// Partial derivatives of the local error w.r.t. (p10, p01):
///   d/dp10 = p0*alpha*(1-pf) - p1*alpha*(1-pd)
///   d/dp01 = -p0*alpha*pf + p1*alpha*pd
std::pair<double, double> d_pe_local(const AttackConfig& attack,
                                     const SensorModel& sensor, const Priors& priors);

/// Closed-form derivative of the system error w.r.t. p10 for a fixed Normal
/// rule k in [1, n]:
///   p0*alpha*(1-pf)*w(pi10) - p1*alpha*(1-pd)*w(pi11)
/// with w(p) = n*C(n-1,k-1)*p^(k-1)*(1-p)^(n-k).
double d_pE_dP10(const NetworkConfig& cfg, int k);

/// Same for p01: p1*alpha*pd*w(pi11) - p0*alpha*pf*w(pi10).
double d_pE_dP01(const NetworkConfig& cfg, int k);

/// Sign functions of the two system-error derivatives. The derivative factors
/// as g*(e^r - 1) with g >= 0, so its sign matches the sign of r.
double r_p10(const NetworkConfig& cfg, int k);
double r_p01(const NetworkConfig& cfg, int k);

}  // namespace byzdet
