#pragma once

#include <vector>

#include "spectre/formula.hpp"
#include "spectre/newton.hpp"
#include "spectre/spectrum.hpp"

namespace spectre::testing {

inline MonomialData support(std::vector<IVec> exps) {
  MonomialData m;
  m.nvars = static_cast<int>(exps.front().size());
  m.exponents = std::move(exps);
  return m;
}

inline NewtonData newton(std::vector<IVec> exps) { return build_newton(support(std::move(exps))); }

inline IVec fermat_exponent(size_t nvars, size_t i, long d) {
  IVec e(nvars, 0);
  e[i] = d;
  return e;
}

inline MonomialData fermat_support(const IVec& degrees) {
  std::vector<IVec> exps;
  for (size_t i = 0; i < degrees.size(); ++i) exps.push_back(fermat_exponent(degrees.size(), i, degrees[i]));
  return support(exps);
}

inline MixedSpectrum ms(const std::string& formula) { return eval_spectrum_formula(formula); }

inline MonomialData curve8_support() { return support({{8, 0}, {0, 8}, {4, 1}, {1, 4}, {2, 2}}); }
inline MixedSpectrum curve8_spectrum() {
  return ms("[(1/2,0)] + 2[(2/3,1)] + 2[(5/6,1)] + 3[(1,2)] + 2[(7/6,1)] + 2[(4/3,1)] + [(3/2,2)]");
}
inline MixedSpectrum curve8_join_a1_spectrum() {
  return ms("[(3/2,2)] + 2[(5/3,3)] + 2[(11/6,3)] + 3[(2,4)] + [(5/2,4)] + 2[(13/6,3)] + 2[(7/3,3)]");
}
inline MixedSpectrum e7_spectrum() { return ms("[(1,3)] + 2[(5/4,2)] + 3[(3/2,2)] + 2[(7/4,2)] + [(2,3)]"); }

// Fermat/QH degree vectors with d_i <= 6 and n <= 3.
inline std::vector<IVec> route_corpus() {
  return {{2, 2},       {2, 3},       {3, 3},       {2, 5},       {4, 4},       {3, 5},       {5, 6},
          {2, 2, 2},    {2, 3, 3},    {2, 3, 4},    {2, 3, 5},    {2, 3, 6},    {3, 3, 3},    {2, 4, 4},
          {3, 3, 4},    {2, 2, 5},    {3, 4, 5},    {4, 4, 4},    {2, 2, 2, 2}, {2, 2, 2, 3}, {2, 2, 3, 3},
          {2, 3, 3, 3}, {3, 3, 3, 3}, {2, 2, 3, 6}};
}

}  // namespace spectre::testing
