#pragma once

#include <map>
#include <string>

#include "spectre/spectrum.hpp"

namespace spectre {

using Env = std::map<std::string, Rat>;

// Rational expression over + - * / ( ), integers and named parameters.
Rat eval_expr(const std::string& expr, const Env& env = {});

// Spectrum formula: "0" or terms joined by + / -, each term one of
//   [k] [(alpha, w)]
//   [k] sum(l=lo..hi) term
// with alpha, lo, hi rational expressions and w an integer expression.
MixedSpectrum eval_spectrum_formula(const std::string& formula, const Env& env = {});

}  // namespace spectre
