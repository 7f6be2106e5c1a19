#pragma once

#include <string>
#include <vector>

#include "spectre/newton.hpp"
#include "spectre/spectrum.hpp"

namespace spectre {

struct WeightVector {
  std::vector<Rat> weights;
  long d = 1;
  IVec twiddle;  // w_i * d

  static WeightVector from(std::vector<Rat> w);  // throws DomainError unless all w_i in (0,1)
  static WeightVector parse(const std::string& csv);  // "u1/v1,u2/v2,..."
  int n() const { return static_cast<int>(weights.size()) - 1; }
};

MixedSpectrum qh_spectrum(const WeightVector& w);
MixedSpectrum fermat_spectrum(const IVec& degrees);

// Solves m . w = 1 over the support.
WeightVector weights_from_monomials(const MonomialData& m);

// Lattice points m >= 0 with w . m = 1.
std::vector<IVec> weight_monoid(const WeightVector& w);

struct CYTailReport {
  bool satisfies_2_2d = false;
  bool satisfies_2_2e = false;
  long genus_g = 0;
  bool pure = false;
  bool spectral_check = false;
  long mu = 0;
  long d = 0;
};

CYTailReport cy_tail(const WeightVector& w);
// Same report with g recounted by the brute-force lattice oracle.
long cy_tail_genus_bruteforce(const WeightVector& w);

long modality_check(const WeightVector& w);

}  // namespace spectre

namespace spectre {

struct CYRow {
  int table = 1;            // 1 pure, 2 mixed
  long yonemura = 0;
  std::string arnold;       // Milnor number as the first subscript, e.g. "W_15 (W_1,0)"; empty for mixed rows
  std::string form;
  std::vector<IVec> monomials;
  long d = 0;
  long m_f = 0;             // pure rows
  long mu = 0;              // mixed rows
  long g = 0;               // mixed rows
};
std::vector<CYRow> cy_rows();

struct CYRowCheck {
  int table = 0;
  long yonemura = 0;
  bool ok = false;
  std::vector<std::string> failures;
};
std::vector<CYRowCheck> check_cy_rows(const std::vector<CYRow>& rows);

}  // namespace spectre
