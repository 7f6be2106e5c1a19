#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "spectre/newton.hpp"
#include "spectre/spectrum.hpp"

namespace spectre {

using HodgeKey = std::tuple<int, int, Rat>;  // (p, q, lambda)

struct HodgeDeligneTable {
  int n = 0;
  std::map<HodgeKey, long> entries;  // zero entries omitted

  long at(int p, int q, const Rat& lambda) const;
  MixedSpectrum to_mixed() const;  // sum h^{p,q}_lambda [(p + lambda, p + q)]
};

// Memoizing front end to count_interior; records every count it serves.
class LatticeCounter {
 public:
  explicit LatticeCounter(const NewtonData& nd) : nd_(nd) {}
  const LatticeCount& get(size_t face, long dilate, bool hull);
  // Lambda*(l tau), with the l = 0 convention.
  long face_count(size_t face, long dilate);
  // Lambda*_mu(l Delta_tau), zero for l = 0 and mu != 0.
  long hull_count(size_t face, long dilate, const Rat& mu);
  std::vector<std::pair<PolytopeSpec, LatticeCount>> used() const;
  const NewtonData& newton() const { return nd_; }

 private:
  const NewtonData& nd_;
  std::map<std::tuple<size_t, long, bool>, LatticeCount> memo_;
  mutable std::mutex mu_;
};

std::map<std::pair<int, int>, long> danilov_E(const NewtonData& nd, const std::vector<size_t>& I);
std::map<std::pair<int, int>, long> danilov_E(LatticeCounter& lc, const std::vector<size_t>& I);
std::map<HodgeKey, long> danilov_cE(const NewtonData& nd, const std::vector<size_t>& I);
std::map<HodgeKey, long> danilov_cE(LatticeCounter& lc, const std::vector<size_t>& I);

HodgeDeligneTable vanishing_table(const NewtonData& nd);
HodgeDeligneTable vanishing_table(LatticeCounter& lc);

// P_sigma(u) as a spectrum; requires (iii').
Spectrum brieskorn_poincare(const NewtonData& nd);

// (j, lambda) -> h^{n-j,n}_{van,lambda}, using faces meeting the open orthant.
std::map<std::pair<int, Rat>, long> extremal_strings(const NewtonData& nd);
std::map<std::pair<int, Rat>, long> extremal_strings(LatticeCounter& lc);

}  // namespace spectre

namespace spectre {

// Mixed spectrum for n <= 2 from the spectrum and the extremal strings, using
// conjugation and the weight symmetries of the vanishing cohomology.
// Throws InvalidSpectrum when the data are inconsistent.
MixedSpectrum mixed_from_strings(int n, const Spectrum& s, const std::map<std::pair<int, Rat>, long>& strings);

// Brieskorn spectrum plus extremal strings; needs (iii') but not (iii).
MixedSpectrum newton_mixed_spectrum_nonsimple(const NewtonData& nd);

}  // namespace spectre
