#pragma once

#include <cmath>
#include <cstdint>

namespace ntn {

/// Counter-seeded xoshiro256++ stream. Substreams are derived from
/// (seed, index) through splitmix64, so trial i produces the same draws
/// no matter which thread runs it or in which order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) { *this = substream(seed, 0); }

  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    Rng r;
    std::uint64_t sm = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    for (auto& word : r.s_) word = splitmix64(sm);
    // xoshiro state must not be all zero
    if ((r.s_[0] | r.s_[1] | r.s_[2] | r.s_[3]) == 0) r.s_[0] = 1;
    return r;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /// Exponential with unit mean.
  double exponential() { return -std::log1p(-next_double()); }

  /// Gamma(shape=m, rate=m) for integer m >= 1: unit mean, variance 1/m.
  double gamma_unit_mean(int m) {
    double sum = 0.0;
    for (int i = 0; i < m; ++i) sum += exponential();
    return sum / m;
  }

  /// Poisson(mean) by chunked inversion of the product of uniforms.
  /// Chunks keep the threshold exp(-chunk) well inside double range.
  std::uint64_t poisson(double mean) {
    std::uint64_t count = 0;
    while (mean > 0.0) {
      const double chunk = mean > 60.0 ? 60.0 : mean;
      mean -= chunk;
      const double limit = std::exp(-chunk);
      double prod = next_double();
      while (prod >= limit) {
        ++count;
        prod *= next_double();
      }
    }
    return count;
  }

 private:
  Rng() = default;

  static std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t x = (state += 0x9E3779B97F4A7C15ULL);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4] = {};
};

}  // namespace ntn
