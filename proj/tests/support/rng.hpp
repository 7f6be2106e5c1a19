#pragma once

#include <cstdint>

#include "spectre/spectrum.hpp"

namespace spectre::testing {

// SplitMix64.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed) {}

  uint64_t next() {
    uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1)); }
  Rat rat(long max_den, long max_num) {
    long den = range(1, max_den);
    return make_rat(range(-max_num, max_num), den);
  }

 private:
  uint64_t s_;
};

inline MixedSpectrum random_spectrum(Rng& g, int max_terms, bool nonnegative) {
  MixedSpectrum s;
  int terms = static_cast<int>(g.range(1, max_terms));
  for (int i = 0; i < terms; ++i) {
    long den = g.range(1, 6);
    Rat a = make_rat(g.range(1, 4 * den), den);
    long m = nonnegative ? g.range(1, 3) : g.range(-3, 3);
    s.add(a, static_cast<int>(g.range(0, 6)), m);
  }
  return s;
}

}  // namespace spectre::testing
