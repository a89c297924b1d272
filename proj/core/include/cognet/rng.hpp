#pragma once

#include <cstdint>
#include <random>

namespace cognet {

// splitmix64 finalizer; used to derive independent engine seeds.
std::uint64_t mix64(std::uint64_t x);

// A 64-bit Mersenne Twister keyed by (seed, stream). Distribution transforms
// are implemented here rather than taken from <random> so that draws are
// identical across standard libraries.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  std::uint64_t next_u64() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  // Uniform in (0, 1).
  double uniform_open();
  // Exp(1); always > 0.
  double exponential();
  // Poisson(mean) by counting unit-rate arrivals before `mean`.
  std::int64_t poisson(double mean);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace cognet
