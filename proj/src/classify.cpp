#include "spectre/classify.hpp"

#include <functional>

#include "spectre/errors.hpp"
#include "spectre/newton_spectrum.hpp"

namespace spectre {

InvariantReport invariants(int n, const MixedSpectrum& s) {
  auto chk = support_check(n, s);
  if (!chk.ok) {
    std::string msg = "spectrum fails the support check:";
    for (const auto& v : chk.violations) msg += " " + v + ";";
    throw InvalidSpectrum(msg);
  }
  InvariantReport r;
  r.sigma_min = spectral_min(s);
  r.lct = r.sigma_min < 1 ? r.sigma_min : Rat(1);
  r.period_exponent = r.sigma_min;
  r.lambda_f = to_long(floor_int(r.sigma_min));
  r.max_k_lc = r.lambda_f - 1;
  r.du_bois = r.sigma_min >= 1;
  r.rational = r.sigma_min > 1;
  r.gen_level_bound = to_long(floor_int(Rat(n) - r.sigma_min));
  Spectrum proj = project(s);
  for (const auto& [a, m] : proj.entries())
    if (a > 0 && a <= 1) r.jumping_in_unit.push_back(a);
  return r;
}

bool is_k_log_canonical(const InvariantReport& r, long k) { return r.sigma_min >= 1 + k; }
bool is_k_rational(const InvariantReport& r, long k) { return r.sigma_min > 1 + k; }

namespace {

// Calls visit(x) for every x in Z_{>0}^{n+1} inside the bounding box of Delta^c.
void scan_positive(const NewtonData& nd, const std::function<void(const IVec&)>& visit) {
  size_t N = static_cast<size_t>(nd.nvars);
  IVec hi(N, 0);
  for (const auto& p : nd.points)
    for (size_t j = 0; j < N; ++j) hi[j] = std::max(hi[j], p[j]);
  IVec x(N, 1);
  for (size_t j = 0; j < N; ++j)
    if (hi[j] < 1) return;
  while (true) {
    visit(x);
    size_t j = 0;
    while (j < N && x[j] == hi[j]) x[j++] = 1;
    if (j == N) return;
    ++x[j];
  }
}

}  // namespace

LcTests newton_lc_tests(const NewtonData& nd) {
  require_convenient(nd);
  LcTests t{true, true};
  scan_positive(nd, [&](const IVec& x) {
    Rat h = h_value(nd, x);
    if (h < 1) t.lc = false;
    if (h <= 1) t.rational = false;
  });
  return t;
}

KlcFlags newton_klc_sufficient(const NewtonData& nd, int c) {
  if (c < 1) throw DomainError("c must be >= 1");
  require_convenient(nd);
  require_simple(nd);
  int n = nd.n();
  LatticeCounter lc(nd);
  auto skeleton_empty = [&](int m) {
    if (m + 1 <= 0) return false;
    return nd.strata(static_cast<size_t>(m + 1)).empty();
  };
  bool hull_zero = true, face_zero = true;
  for (size_t f = 0; f < nd.faces.size(); ++f) {
    long l = c - nd.faces[f].c;
    if (l <= 0) continue;
    if (lc.get(f, l, true).value != 0) hull_zero = false;
    if (lc.get(f, l, false).value != 0) face_zero = false;
  }
  KlcFlags r;
  r.ge_c = (c == 1 || skeleton_empty(n - 2 * c + 3)) && hull_zero;
  r.gt_c = (c == 1 || skeleton_empty(n - 2 * c + 1)) && hull_zero && face_zero;
  return r;
}

KulikovReport kulikov_type(const NewtonData& nd) {
  require_convenient(nd);
  int n = nd.n();
  size_t N = static_cast<size_t>(nd.nvars);
  IVec one(N, 1);
  Rat h1 = h_value(nd, one);
  KulikovReport rep;
  if (h1 > 1) {
    rep.type = 1;
    rep.witness = "1 in int(Delta), h(1) = " + to_string(h1);
    return rep;
  }
  if (h1 < 1) {
    bool other = false;
    scan_positive(nd, [&](const IVec& x) {
      if (x != one && h_value(nd, x) <= 1) other = true;
    });
    if (other)
      throw OutsidePositiveOrthantLogic("Delta^c meets Z_{>0}^{n+1} in a point other than 1: not a CY degeneration of the stated kind");
  }
  std::vector<size_t> tight;
  for (size_t i = 0; i < nd.compact.size(); ++i)
    if (dot(nd.normal(i), to_qvec(one)) == h1) tight.push_back(i);
  auto s = nd.stratum(tight);
  if (!s) throw DomainError("no face of Gamma contains the ray through 1");
  int d = nd.faces[*s].dim;
  std::string I = std::to_string(tight.size());
  if (h1 < 1) {
    rep.type = n + 1 - d;
    rep.witness = "1 in int(Delta_I), |I| = " + I + ", dim Gamma_I = " + std::to_string(d);
  } else if (d == 0) {
    rep.type = n + 1;
    rep.witness = "1 is a vertex of Gamma";
  } else {
    rep.type = n + 2 - d;
    rep.witness = "1 in int(Gamma_I), |I| = " + I + ", dim Gamma_I = " + std::to_string(d);
  }
  return rep;
}

long genus_bound(int n, int k, bool assume_ph_vanishes) {
  if (k < 2) throw DomainError("k must be >= 2");
  long top = assume_ph_vanishes ? k : k - 1;
  long r = n + 1;
  if (r > top) return 0;
  long b = 1;
  for (long i = 1; i <= r; ++i) b = b * (top - r + i) / i;
  return b;
}

}  // namespace spectre
