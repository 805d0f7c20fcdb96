#pragma once

#include <cstdint>
#include <random>

#include "metricgeo/rational.hpp"

namespace metricgeo {

// Seeded deterministic generator. Sampling avoids std::uniform_*_distribution
// so streams are identical across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (engine_() & 1u) != 0; }

  // Random rational with numerator in [-max_num, max_num] and denominator in
  // [1, max_den].
  Rational rational(long max_num, long max_den) {
    long num = range(-max_num, max_num);
    long den = range(1, max_den);
    return make_rational(num, den);
  }

  Rational positive_rational(long max_num, long max_den) {
    long num = range(1, max_num);
    long den = range(1, max_den);
    return make_rational(num, den);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace metricgeo
