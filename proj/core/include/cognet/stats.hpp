#pragma once

#include <cstdint>
#include <span>

namespace cognet {

struct EstimateWithCI {
  double mean = 0.0;
  double std_error = 0.0;
  double lo = 0.0;  // 95% interval
  double hi = 0.0;
  std::int64_t samples = 0;

  bool overlaps(const EstimateWithCI& o) const { return lo <= o.hi && o.lo <= hi; }
  // (value - mean) / std_error; 0 when both agree exactly with zero error.
  double z_score(double value) const;
};

inline constexpr double kZ95 = 1.959963984540054;

// Normal-approximation interval from a sample.
EstimateWithCI estimate_from_samples(std::span<const double> xs);
// Proportion estimate; switches to the Wilson interval when the estimate is
// within 5/n of 0 or 1.
EstimateWithCI estimate_proportion(std::int64_t successes, std::int64_t n);

}  // namespace cognet
