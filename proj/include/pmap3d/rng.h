#pragma once

#include <cmath>
#include <cstdint>

namespace pmap3d {

// Counter-based pseudo-random generator (SplitMix64). Each draw advances a
// 64-bit counter by the golden-gamma constant and applies a fixed finalizer,
// so streams are pure functions of (seed, draw index) and reproduce bit for
// bit on any platform. Stream derivation for sub-tasks goes through fork(),
// which mixes a key into the seed instead of splitting counters.
//
// Algorithm: Steele, Lea, Flood, "Fast Splittable Pseudorandom Number
// Generators" (SplitMix64 finalizer, gamma = 0x9E3779B97F4A7C15).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n); n >= 1. Uses rejection to stay unbiased.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  // Standard normal via polar Box-Muller. Deterministic given the seed; the
  // spare value is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  // Derives an independent stream for a keyed sub-task.
  Rng fork(std::uint64_t key) const {
    Rng r(state_ ^ (0xD1B54A32D192ED03ULL * (key + 1)));
    r.next_u64();
    return r;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace pmap3d
