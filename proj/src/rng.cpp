#include "dqc1/rng.hpp"

#include <cmath>

#include "dqc1/errors.hpp"

namespace dqc1 {
namespace {

// log C(n,k) + k log q + (n-k) log(1-q)
double log_pmf(std::int64_t n, std::int64_t k, double q) {
  double lc = std::lgamma(static_cast<double>(n) + 1.0) -
              std::lgamma(static_cast<double>(k) + 1.0) -
              std::lgamma(static_cast<double>(n - k) + 1.0);
  return lc + static_cast<double>(k) * std::log(q) +
         static_cast<double>(n - k) * std::log1p(-q);
}

}  // namespace

// Inversion from the mode: enumerate outcomes m, m+1, m-1, m+2, ... and
// assign each an interval of length pmf(k); a single uniform draw selects the
// interval. The pmf is extended stepwise with the ratio recurrence, so the
// expected walk length is O(sqrt(n q (1-q))). The enumeration order is fixed,
// which makes draws reproducible for a given engine state.
std::int64_t binomial_draw(RandomEngine& rng, std::int64_t n, double q) {
  if (n < 0) throw ValidationError("binomial_draw: negative trial count");
  if (!(q >= 0.0 && q <= 1.0))
    throw ValidationError("binomial_draw: probability outside [0, 1]");
  if (n == 0 || q == 0.0) return 0;
  if (q == 1.0) return n;

  const double u = uniform_double(rng);

  const auto mode =
      static_cast<std::int64_t>(std::floor((static_cast<double>(n) + 1.0) * q));
  const std::int64_t m = std::min(mode, n);
  const double pm = std::exp(log_pmf(n, m, q));
  const double r = q / (1.0 - q);

  double cum = pm;
  if (u < cum) return m;

  std::int64_t lo = m, hi = m;
  double p_lo = pm, p_hi = pm;
  while (lo > 0 || hi < n) {
    if (hi < n) {
      // pmf(k+1) = pmf(k) * (n-k)/(k+1) * q/(1-q)
      p_hi *= static_cast<double>(n - hi) / static_cast<double>(hi + 1) * r;
      ++hi;
      cum += p_hi;
      if (u < cum) return hi;
    }
    if (lo > 0) {
      // pmf(k-1) = pmf(k) * k / ((n-k+1) * q/(1-q))
      p_lo *= static_cast<double>(lo) / (static_cast<double>(n - lo + 1) * r);
      --lo;
      cum += p_lo;
      if (u < cum) return lo;
    }
  }
  // u fell into the sliver of rounding slack above the accumulated mass.
  return m;
}

}  // namespace dqc1
