#pragma once

#include <string>
#include <vector>

#include "spectre/newton.hpp"
#include "spectre/spectrum.hpp"

namespace spectre {

struct InvariantReport {
  Rat sigma_min;
  Rat lct;
  Rat period_exponent;
  long lambda_f = 0;
  long max_k_lc = 0;
  bool du_bois = false;
  bool rational = false;
  long gen_level_bound = 0;  // an upper bound for the generation level, never its value
  std::vector<Rat> jumping_in_unit;
};

InvariantReport invariants(int n, const MixedSpectrum& s);
bool is_k_log_canonical(const InvariantReport& r, long k);  // sigma_min >= 1 + k
bool is_k_rational(const InvariantReport& r, long k);       // sigma_min > 1 + k

struct LcTests {
  bool lc = false;
  bool rational = false;
};
LcTests newton_lc_tests(const NewtonData& nd);

struct KlcFlags {
  bool ge_c = false;
  bool gt_c = false;
};
KlcFlags newton_klc_sufficient(const NewtonData& nd, int c);

struct KulikovReport {
  int type = 0;
  std::string witness;
};
KulikovReport kulikov_type(const NewtonData& nd);

long genus_bound(int n, int k, bool assume_ph_vanishes);

}  // namespace spectre
