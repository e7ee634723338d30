#pragma once

#include <cstdint>
#include <random>

namespace wsn::sim {

/// SplitMix64 finalizer. Used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of the per-node stream: splitmix64(run_seed + 0x9E3779B97F4A7C15 * (stream_id + 1)).
std::uint64_t derive_seed(std::uint64_t run_seed, std::uint64_t stream_id);

/// Seeded random stream.
///
/// The bit generator is std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. The distributions below are implemented here rather than taken
/// from <random>, because the standard library distributions are allowed to
/// differ between implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [lo, hi] (inclusive), unbiased via rejection.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Normal draw via Box-Muller (one value per call, no caching).
  double normal(double mean, double stddev);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace wsn::sim
