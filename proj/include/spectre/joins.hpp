#pragma once

#include "spectre/spectrum.hpp"

namespace spectre {

// Spectrum of f (+) g; throws NegativeMultiplicity on unreduced inputs.
MixedSpectrum join(const MixedSpectrum& a, const MixedSpectrum& b);
// Join with z^r.
MixedSpectrum suspend(const MixedSpectrum& s, int r);
// (alpha, w) -> (alpha + k, w + 2k)
MixedSpectrum tate_shift(const MixedSpectrum& s, int k);

}  // namespace spectre
