#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace carkit {

/// SplitMix64 stream (Steele/Lea/Flood finalizer). All randomness in the
/// library is drawn from this generator so that results depend only on the
/// 64-bit seed, never on platform distribution internals.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double uniform_symmetric() { return 2.0 * uniform() - 1.0; }

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u = 1.0 - uniform();  // (0, 1]
    const double r = std::sqrt(-2.0 * std::log(u));
    const double theta = 2.0 * std::numbers::pi * uniform();
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
  }

  /// Complex number with real and imaginary parts uniform in [-1, 1).
  std::complex<double> complex_in_box() {
    const double re = uniform_symmetric();
    const double im = uniform_symmetric();
    return {re, im};
  }

 private:
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// Counter-hash seed splitting: the sub-seed depends only on (seed, salt),
/// not on draw order, so derived streams can be consumed in any order.
/// Constant is the SplitMix64 golden gamma.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 g(seed + 0x9E3779B97F4A7C15ull * (salt + 1));
  return g.next();
}

}  // namespace carkit
