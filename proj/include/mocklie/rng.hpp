#pragma once

#include <cstdint>

#include "mocklie/rational.hpp"

namespace mocklie {

// 64-bit linear congruential generator, state' = a*state + c mod 2^64
// with the MMIX constants a = 6364136223846793005 and
// c = 1442695040888963407. Fixed seed in, fixed stream out, so every
// randomized check is reproducible from its --seed.
class Lcg {
 public:
  explicit Lcg(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  // Uniform-ish integer in [-5, 5], taken from the high bits.
  int next_int() { return (int)((next_u64() >> 33) % 11) - 5; }

  Rational next_rational() { return Rational(next_int()); }

  Vec next_vec(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = next_rational();
    return v;
  }

 private:
  uint64_t state_;
};

}  // namespace mocklie
