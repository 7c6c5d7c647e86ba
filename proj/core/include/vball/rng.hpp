#pragma once

#include "vball/rational.hpp"

#include <cstdint>
#include <random>

namespace vball {

/// Seeded deterministic generator. Draws go through fixed modulo
/// arithmetic rather than standard-library distributions, whose output
/// sequences the standard leaves unspecified; equal seeds therefore give
/// equal streams on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  /// Inclusive integer range.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool one_in(std::uint64_t n) { return below(n) == 0; }

  /// Numerator in [-max_num, max_num], denominator in [1, max_den].
  Rational rational(long max_num, long max_den) {
    Rational value(range(-max_num, max_num), range(1, max_den));
    value.canonicalize();
    return value;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vball
