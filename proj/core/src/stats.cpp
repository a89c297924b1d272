#include "cognet/stats.hpp"

#include <algorithm>
#include <cmath>

#include "cognet/errors.hpp"

namespace cognet {

double EstimateWithCI::z_score(double value) const {
  const double d = value - mean;
  if (std_error > 0.0) return d / std_error;
  return d == 0.0 ? 0.0 : std::copysign(INFINITY, d);
}

EstimateWithCI estimate_from_samples(std::span<const double> xs) {
  if (xs.empty()) throw DomainError("estimate needs at least one sample");
  EstimateWithCI e;
  e.samples = static_cast<std::int64_t>(xs.size());
  // Two-pass mean and variance.
  double sum = 0.0;
  for (double x : xs) sum += x;
  e.mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - e.mean) * (x - e.mean);
  const double var = xs.size() > 1 ? ss / static_cast<double>(xs.size() - 1) : 0.0;
  e.std_error = std::sqrt(var / static_cast<double>(xs.size()));
  e.lo = e.mean - kZ95 * e.std_error;
  e.hi = e.mean + kZ95 * e.std_error;
  return e;
}

EstimateWithCI estimate_proportion(std::int64_t successes, std::int64_t n) {
  if (n < 1) throw DomainError("estimate needs at least one sample");
  if (successes < 0 || successes > n) throw DomainError("successes out of range");
  EstimateWithCI e;
  e.samples = n;
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  e.mean = p;
  e.std_error = std::sqrt(p * (1.0 - p) / nn);
  if (p <= 5.0 / nn || p >= 1.0 - 5.0 / nn) {
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = kZ95 * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    e.lo = std::min(p, center - half);
    e.hi = std::max(p, center + half);
  } else {
    e.lo = p - kZ95 * e.std_error;
    e.hi = p + kZ95 * e.std_error;
  }
  e.lo = std::max(0.0, e.lo);
  e.hi = std::min(1.0, e.hi);
  return e;
}

}  // namespace cognet
