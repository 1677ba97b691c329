#pragma once

#include <cstdint>
#include <random>

namespace stnp {

// Deterministic uniform generator. std::mt19937_64 has a standard-mandated
// output sequence; the double extraction below avoids the
// implementation-defined behaviour of std::uniform_real_distribution, so the
// same seed yields the same stream on every build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t next_u64() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace stnp
