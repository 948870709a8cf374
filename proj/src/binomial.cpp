#include "byzdet/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace byzdet {

double log_choose(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  if (k == 0 || k == n) return 0.0;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_binom_pmf(int n, int k, double p) {
  const double neg_inf = -std::numeric_limits<double>::infinity();
  if (k < 0 || k > n) return neg_inf;
  if (p <= 0.0) return k == 0 ? 0.0 : neg_inf;
  if (p >= 1.0) return k == n ? 0.0 : neg_inf;
  return log_choose(n, k) + k * std::log(p) + (n - k) * std::log1p(-p);
}

double binomial_range_sum(int n, int lo, int hi, double p) {
  lo = std::max(lo, 0);
  hi = std::min(hi, n);
  if (lo > hi) return 0.0;
  if (p <= 0.0) return lo == 0 ? 1.0 : 0.0;
  if (p >= 1.0) return hi == n ? 1.0 : 0.0;

  double sum = 0.0;
  double comp = 0.0;  // Kahan carry
  for (int i = lo; i <= hi; ++i) {
    const double term = std::exp(log_binom_pmf(n, i, p));
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return std::clamp(sum, 0.0, 1.0);
}

double binomial_tail_ge(int n, int k, double p) {
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  return binomial_range_sum(n, k, n, p);
}

double binomial_cdf_lt(int n, int k, double p) {
  if (k <= 0) return 0.0;
  if (k > n) return 1.0;
  return binomial_range_sum(n, 0, k - 1, p);
}

}  // namespace byzdet
