#pragma once

#include <cstdint>

namespace ardlkit {

/// splitmix64 finalizer (Steele, Lea & Flood 2014).
std::uint64_t mix64(std::uint64_t z);

/// Seed of replication `index` under `master`:
///   mix64(master + 0x9E3779B97F4A7C15 * (index + 1)).
/// A pure function of (master, index), so results do not depend on how
/// replications are scheduled across workers.
std::uint64_t replication_seed(std::uint64_t master, std::uint64_t index);

/// xoshiro256** with a portable normal generator (Marsaglia polar method).
/// Output is identical on every platform for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ardlkit
