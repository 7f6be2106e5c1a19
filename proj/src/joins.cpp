#include "spectre/joins.hpp"

#include "spectre/errors.hpp"

namespace spectre {

MixedSpectrum join(const MixedSpectrum& a, const MixedSpectrum& b) {
  if (!a.nonnegative() || !b.nonnegative()) throw NegativeMultiplicity("join of a spectrum with negative entries");
  return convolve(a, b);
}

MixedSpectrum suspend(const MixedSpectrum& s, int r) {
  if (r < 2) throw DomainError("suspension exponent must be >= 2");
  MixedSpectrum z;
  for (int i = 1; i < r; ++i) z.add(make_rat(i, r), 0, 1);
  return join(s, z);
}

MixedSpectrum tate_shift(const MixedSpectrum& s, int k) {
  MixedSpectrum r;
  for (const auto& [key, m] : s.entries()) r.add(key.first + k, key.second + 2 * k, m);
  return r;
}

}  // namespace spectre
