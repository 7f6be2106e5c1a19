#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectre/formula.hpp"
#include "spectre/newton.hpp"
#include "spectre/spectrum.hpp"

namespace spectre {

struct Branch {
  MixedSpectrum lim_spectrum;
  std::vector<Rat> betas;  // one per unit of multiplicity, in entry order
  long mu = 1;
};

struct BranchData {
  std::vector<Branch> branches;
  void validate() const;  // throws DomainError
};

struct SSSResult {
  MixedSpectrum difference;  // iso minus the limit correction
  MixedSpectrum sigma2;
  MixedSpectrum sigma1;
  bool has_sigma1 = false;
};

// sum_{i,j,k} (alpha_ij, w_ij) * ((beta_ij + k) / (mu_i r), 0), k in [0, mu_i r - 1]
MixedSpectrum sss_correction(const BranchData& bd, long r);

// Caller asserts r > r_frak. Throws NegativeFinalSpectrum if sigma2 has a negative entry.
SSSResult sss_difference(const MixedSpectrum& iso, const BranchData& bd, long r,
                         const std::optional<MixedSpectrum>& sigma1 = std::nullopt);

// Closed form for J_{kappa,infty} = x^2 + y^3 + y^2 z^kappa.
MixedSpectrum jk_infinity(long kappa);

struct JkPipeline {
  SSSResult raw;             // at r = 3 kappa with iso = x^2 + y^3 + z^{3 kappa}
  bool cancels = false;      // every negative term cancels in the spectrum
  long h22 = 0;              // h^{2,2}_van,0 of f + z^{3 kappa + 1} from the extremal strings
  MixedSpectrum sigma2;      // raw difference with the integer terms re-weighted
};
JkPipeline jk_sss_pipeline(long kappa);

// Order of T^ss: lcm of the denominators of the spectral values.
long tss_order(const MixedSpectrum& s);

long jk_pg_bound(const std::vector<long>& kappas);

struct CSDiscrepancy {
  long delta = 0;
  std::optional<long> r_a;
  std::optional<long> r_b;
  bool equality = false;  // r_a + r_b = delta holds
};
CSDiscrepancy cs_discrepancy(int n, long delta, std::optional<long> r_a, std::optional<long> r_b,
                             bool irreducible);

// Supports used as isolated models.
MonomialData tpqr_support(long p, long q, long r);       // xyz + x^p + y^q + z^r
MonomialData t2qr_support(long q, long r);               // x^2 + y^2 z^2 + y^q + z^r
Spectrum tpqr_closed_form(const std::vector<long>& r);   // P_sigma for prod z_i + sum z_i^{r_i}

struct SlcRow {
  std::string symbol;
  std::string local_form;
  std::string g;
  std::string r_frak;   // expression in the row parameters
  long N = 0;
  std::string sigma1;   // spectrum formula
  std::string sigma2;
  std::string iso_provenance;  // "computed" or "stored"
  std::string params;   // e.g. "q=3..7"
};
std::vector<SlcRow> slc_rows();

struct SlcRowCheck {
  std::string symbol;
  long instances = 0;
  bool ok = false;
  std::vector<std::string> failures;
};
struct SlcReport {
  std::vector<SlcRowCheck> rows;
  long passed() const;
};

SlcReport check_slc_rows(const std::vector<SlcRow>& rows);
// Throws MismatchReport listing the failing rows.
SlcReport slc_table();

}  // namespace spectre
