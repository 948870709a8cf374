#pragma once

namespace byzdet {

/// log C(n, k); zero for the degenerate k=0 / k=n cases.
double log_choose(int n, int k);

/// log P(X = k) for X ~ Binomial(n, p). Exact at the p ∈ {0,1} corners.
double log_binom_pmf(int n, int k, double p);

/// Sum of Binomial(n, p) pmf terms for k in [lo, hi], each evaluated in the
/// log domain, accumulated with Kahan compensation. Accurate for n up to 1e4.
double binomial_range_sum(int n, int lo, int hi, double p);

/// P(X >= k). k may range over [0, n+1]; k <= 0 and k == n+1 short-circuit
/// to exact 1 and 0.
double binomial_tail_ge(int n, int k, double p);

/// P(X < k) over the same extended k range.
double binomial_cdf_lt(int n, int k, double p);

}  // namespace byzdet
