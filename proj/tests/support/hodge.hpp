#pragma once

#include "spectre/spectrum.hpp"

namespace spectre::testing {

// v^{p,q}: total multiplicity of entries (p + lambda, p + q), summed over lambda.
inline long vpq(const MixedSpectrum& s, long p, long q) {
  long v = 0;
  for (const auto& [k, m] : s.entries())
    if (floor_int(k.first) == p && k.second == p + q) v += m;
  return v;
}

}  // namespace spectre::testing
