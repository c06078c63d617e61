#pragma once

#include <cstdint>

#include "coverineq/rational.hpp"

namespace coverineq {

// Deterministic generator with hand-rolled sampling so that output streams
// are identical across compilers and platforms (std:: distributions are not).
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  // Derives an independent stream, e.g. one per harness trial.
  static Rng derive(uint64_t seed, uint64_t stream) {
    Rng mixer(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    mixer.next_u64();
    return Rng(mixer.next_u64());
  }

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), unbiased via rejection.
  uint64_t next_below(uint64_t n) {
    if (n == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do { x = next_u64(); } while (x >= limit);
    return x % n;
  }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_below(static_cast<uint64_t>(hi - lo + 1)));
  }

  double next_double() {  // [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on the grid {-den, ..., den}/den; small denominators keep exact
  // arithmetic downstream cheap.
  Rational next_rational(long den = 16) {
    long num = static_cast<long>(next_below(static_cast<uint64_t>(2 * den + 1))) - den;
    return Rational(num, den);
  }

  Rational next_rational_unit(long den = 16) {  // (0, 1]
    long num = 1 + static_cast<long>(next_below(static_cast<uint64_t>(den)));
    return Rational(num, den);
  }

private:
  uint64_t state_;
};

}  // namespace coverineq
