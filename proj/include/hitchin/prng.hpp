#pragma once
#include <cstdint>

#include "hitchin/rational.hpp"

namespace hitchin {

// Deterministic splitmix64 stream; the same seed yields the same values on
// every platform, which the reporting determinism contract relies on.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Small exact scalar with numerator in [-num_max, num_max], denominator in [1, den_max].
  Rational rational(long num_max = 9, long den_max = 3) {
    return Rational(int_in(-num_max, num_max), int_in(1, den_max));
  }

 private:
  std::uint64_t state_;
};

}  // namespace hitchin
