#pragma once
// Interval estimates for the sampled experiments.
//
// Wilson score intervals for binomial proportions (valid at the very small
// hit counts rotational censuses produce), and exact Clopper-Pearson bounds
// for the distinguisher's trial summaries.  Doubles are fine here: these
// are confidence intervals on Monte-Carlo output, not exact quantities.

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace rotkit {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

inline constexpr double kZ95 = 1.959963984540054;  // 97.5% normal quantile

inline Interval wilson_95(std::uint64_t hits, std::uint64_t samples) {
  if (samples == 0) throw std::domain_error("wilson_95: samples must be >= 1");
  if (hits > samples) throw std::domain_error("wilson_95: hits > samples");
  const double n = (double)samples;
  const double p = (double)hits / n;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = (kZ95 / denom) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  Interval iv{center - half, center + half};
  // At the extremes the exact endpoint is 0 (resp. 1); computing center and
  // half through different roundings can leave a stray ulp that would put
  // the point estimate outside the interval, so pin them.
  if (hits == 0 || iv.lo < 0.0) iv.lo = 0.0;
  if (hits == samples || iv.hi > 1.0) iv.hi = 1.0;
  return iv;
}

namespace detail {

// log P[Bin(n,p) <= k], summed in log space for stability.
inline double log_binom_cdf(std::uint64_t k, std::uint64_t n, double p) {
  if (p <= 0.0) return 0.0;        // all mass at 0 <= k
  if (p >= 1.0) return k >= n ? 0.0 : -INFINITY;
  const double lp = std::log(p), lq = std::log1p(-p);
  double term = (double)n * lq;    // log P[X = 0]
  double acc = term;
  for (std::uint64_t i = 0; i < k; ++i) {
    term += std::log((double)(n - i)) - std::log((double)(i + 1)) + lp - lq;
    // acc = log(exp(acc) + exp(term))
    acc = acc > term ? acc + std::log1p(std::exp(term - acc))
                     : term + std::log1p(std::exp(acc - term));
  }
  return acc;
}

}  // namespace detail

// Exact (Clopper-Pearson) 95% interval for a binomial proportion, found by
// bisection on the tail probabilities.
inline Interval clopper_pearson_95(std::uint64_t k, std::uint64_t n) {
  if (n == 0) throw std::domain_error("clopper_pearson_95: n must be >= 1");
  if (k > n) throw std::domain_error("clopper_pearson_95: k > n");
  const double log_half_alpha = std::log(0.025);
  Interval iv;

  if (k == 0) {
    iv.lo = 0.0;
  } else {
    // Largest p with P[X >= k | p] <= alpha/2, i.e. P[X <= k-1 | p] >= 1 - alpha/2.
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double upper_tail = -std::expm1(detail::log_binom_cdf(k - 1, n, mid));
      (std::log(upper_tail > 0 ? upper_tail : 1e-300) <= log_half_alpha ? lo : hi) = mid;
    }
    iv.lo = lo;
  }

  if (k == n) {
    iv.hi = 1.0;
  } else {
    // Smallest p with P[X <= k | p] <= alpha/2.
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      (detail::log_binom_cdf(k, n, mid) <= log_half_alpha ? hi : lo) = mid;
    }
    iv.hi = hi;
  }
  return iv;
}

}  // namespace rotkit
