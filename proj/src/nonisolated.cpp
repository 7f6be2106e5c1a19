#include "spectre/nonisolated.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "spectre/errors.hpp"
#include "spectre/newton_spectrum.hpp"
#include "spectre/weighted.hpp"

namespace spectre {

void BranchData::validate() const {
  for (size_t i = 0; i < branches.size(); ++i) {
    const Branch& b = branches[i];
    std::string at = "branch " + std::to_string(i);
    if (b.mu < 1) throw DomainError(at + ": mu must be positive");
    long total = 0;
    for (const auto& [k, m] : b.lim_spectrum.entries()) {
      if (m < 0) throw DomainError(at + ": negative multiplicity in the limit spectrum");
      total += m;
    }
    if (static_cast<long>(b.betas.size()) != total)
      throw DomainError(at + ": " + std::to_string(b.betas.size()) + " betas for total multiplicity " +
                        std::to_string(total));
    for (const auto& beta : b.betas)
      if (beta < 0 || beta >= 1) throw DomainError(at + ": beta " + to_string(beta) + " outside [0,1)");
  }
}

MixedSpectrum sss_correction(const BranchData& bd, long r) {
  if (r < 1) throw DomainError("r must be positive");
  bd.validate();
  MixedSpectrum out;
  for (const Branch& b : bd.branches) {
    long mr = b.mu * r;
    size_t j = 0;
    for (const auto& [key, m] : b.lim_spectrum.entries()) {
      MixedSpectrum lim = MixedSpectrum::single(key.first, key.second);
      for (long c = 0; c < m; ++c, ++j) {
        MixedSpectrum tau;
        for (long k = 0; k < mr; ++k) tau.add((b.betas[j] + k) / Rat(mr), 0, 1);
        out += convolve(lim, tau);
      }
    }
  }
  return out;
}

SSSResult sss_difference(const MixedSpectrum& iso, const BranchData& bd, long r,
                         const std::optional<MixedSpectrum>& sigma1) {
  SSSResult res;
  res.difference = iso - sss_correction(bd, r);
  if (sigma1) {
    res.has_sigma1 = true;
    res.sigma1 = *sigma1;
    res.sigma2 = res.difference + *sigma1;
    if (!res.sigma2.nonnegative())
      throw NegativeFinalSpectrum("sigma2 = " + to_string(res.sigma2) + " has a negative entry");
  }
  return res;
}

MixedSpectrum jk_infinity(long kappa) {
  if (kappa < 1) throw DomainError("kappa must be >= 1");
  MixedSpectrum s;
  if (kappa % 2 == 1) {
    Rat den(6 * kappa);
    for (long m = 1; m <= (kappa - 1) / 2; ++m) {
      s.add((5 * kappa + 2 * m) / den, 2, 1);
      s.add((13 * kappa - 2 * m) / den, 2, 1);
    }
    for (long m = 1; m <= 2 * kappa - 1; ++m) s.add((7 * kappa + 2 * m) / den, 2, 1);
  } else {
    Rat den(3 * kappa);
    Rat h(kappa / 2);
    for (long m = 1; m <= kappa / 2 - 1; ++m) {
      s.add((5 * h + m) / den, 2, 1);
      s.add((13 * h - m) / den, 2, 1);
    }
    for (long m = 1; m <= 2 * kappa - 1; ++m) s.add((7 * h + m) / den, 2, 1);
    s.add(Rat(2), 4, 1);
  }
  return s;
}

namespace {

BranchData a_infinity_branches(long count, const Rat& beta) {
  BranchData bd;
  for (long i = 0; i < count; ++i) bd.branches.push_back(Branch{MixedSpectrum::single(Rat(1), 2), {beta}, 1});
  return bd;
}

}  // namespace

JkPipeline jk_sss_pipeline(long kappa) {
  if (kappa < 1) throw DomainError("kappa must be >= 1");
  JkPipeline out;
  MixedSpectrum iso = qh_spectrum(WeightVector::from({make_rat(1, 2), make_rat(1, 3), make_rat(1, 3 * kappa)}));
  Rat beta = kappa % 2 == 1 ? make_rat(1, 2) : Rat(0);
  out.raw = sss_difference(iso, a_infinity_branches(1, beta), 3 * kappa);
  out.raw.has_sigma1 = true;
  out.raw.sigma2 = out.raw.difference;
  Spectrum proj = project(out.raw.difference);
  out.cancels = proj.nonnegative();

  MonomialData md;
  md.nvars = 3;
  md.exponents = {{2, 0, 0}, {0, 3, 0}, {0, 2, kappa}, {0, 0, 3 * kappa + 1}};
  auto strings = extremal_strings(build_newton(md));
  auto it = strings.find({0, Rat(0)});
  out.h22 = it == strings.end() ? 0 : it->second;

  for (const auto& [key, m] : out.raw.difference.entries())
    if (!is_integer(key.first)) out.sigma2.add(key.first, key.second, m);
  for (const auto& [a, m] : proj.entries()) {
    if (!is_integer(a) || m == 0) continue;
    if (a != 2 || m != out.h22)
      throw InvalidSpectrum("integer term " + to_string(a) + " with multiplicity " + std::to_string(m) +
                            " does not match h^{2,2} = " + std::to_string(out.h22));
    out.sigma2.add(a, 4, m);
  }
  if (out.h22 != 0 && proj.mult(Rat(2)) == 0)
    throw InvalidSpectrum("h^{2,2} is nonzero but the spectrum has no term at 2");
  return out;
}

long tss_order(const MixedSpectrum& s) {
  Int l = 1;
  for (const auto& [k, m] : s.entries())
    if (m != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), k.first.get_den_mpz_t());
  return to_long(l);
}

long jk_pg_bound(const std::vector<long>& kappas) {
  long total = 0;
  for (long kappa : kappas) {
    if (kappa < 1) throw DomainError("kappa must be >= 1");
    long below = 0;
    MixedSpectrum s = jk_infinity(kappa);
    for (const auto& [k, m] : s.entries())
      if (k.first < 1) below += m;
    long expected = (kappa - 1) / 2;
    if (below != expected)
      throw MismatchReport("J_" + std::to_string(kappa) + ": " + std::to_string(below) +
                           " entries below 1, expected " + std::to_string(expected));
    total += below;
  }
  return total;
}

CSDiscrepancy cs_discrepancy(int n, long delta, std::optional<long> r_a, std::optional<long> r_b,
                             bool irreducible) {
  if (n < 0 || n % 2 != 0) throw DomainError("n must be even and nonnegative");
  if (delta < 0) throw DomainError("delta must be nonnegative");
  if ((r_a && *r_a < 0) || (r_b && *r_b < 0)) throw DomainError("discrepancies must be nonnegative");
  long known = (r_a ? *r_a : 0) + (r_b ? *r_b : 0);
  if (known > delta)
    throw BoundViolated("r_a + r_b = " + std::to_string(known) + " exceeds delta = " + std::to_string(delta));
  CSDiscrepancy out{delta, r_a, r_b, false};
  if (n == 2 && irreducible) {
    out.equality = true;
    if (r_a && r_b && known != delta)
      throw BoundViolated("r_a + r_b = " + std::to_string(known) + " must equal delta = " + std::to_string(delta) +
                          " for an irreducible surface");
    if (r_a && !r_b) out.r_b = delta - *r_a;
    if (r_b && !r_a) out.r_a = delta - *r_b;
  }
  return out;
}

MonomialData tpqr_support(long p, long q, long r) {
  MonomialData md;
  md.nvars = 3;
  md.exponents = {{1, 1, 1}, {p, 0, 0}, {0, q, 0}, {0, 0, r}};
  return md;
}

MonomialData t2qr_support(long q, long r) {
  MonomialData md;
  md.nvars = 3;
  md.exponents = {{2, 0, 0}, {0, 2, 2}, {0, q, 0}, {0, 0, r}};
  return md;
}

Spectrum tpqr_closed_form(const std::vector<long>& r) {
  // sum over |J| >= 2 of P_{|J|} prod_{j not in J} F_{r_j}
  size_t N = r.size();
  if (N < 3) throw DomainError("need at least three exponents");
  Rat inv = 0;
  for (long x : r) {
    if (x < 2) throw DomainError("exponents must be >= 2");
    inv += make_rat(1, x);
  }
  if (inv >= 1) throw DomainError("exponents must satisfy sum 1/r_i < 1");
  Spectrum s;
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    long size = __builtin_popcount(mask);
    if (size < 2) continue;
    std::vector<Rat> shifts{Rat(0)};
    for (size_t j = 0; j < N; ++j) {
      if (mask & (1u << j)) continue;
      std::vector<Rat> next;
      for (const auto& a : shifts)
        for (long i = 1; i < r[j]; ++i) next.push_back(a + make_rat(i, r[j]));
      shifts = std::move(next);
    }
    for (long i = 1; i < size; ++i)
      for (const auto& a : shifts) s.add(Rat(i) + a, 1);
  }
  return s;
}

std::vector<SlcRow> slc_rows() {
  return {
      {"A_inf", "x^2+y^2", "z", "0", 1, "[(1,2)]", "0", "computed", ""},
      {"D_inf", "x^2+y^2z", "z-y", "3", 1, "0", "[(3/2,2)]", "stored", ""},
      {"T_2,inf,inf", "x^2+y^2z^2", "z-y", "4", 2, "[(1,2)]", "[(3/2,2)] + [(2,4)]", "computed", ""},
      {"T_2,q,inf", "x^2+y^2z^2+y^q", "z", "2q/(q-2)", 1, "0",
       "[(3/2,2)] + [(2,4)] + sum(l=1..q-1)[(1+l/q,2)]", "computed", "q=3..7"},
      {"T_inf,inf,inf", "xyz", "x+y+z", "3", 3, "2[(1,2)]", "[(2,4)]", "computed", ""},
      {"T_p,inf,inf", "xyz+x^p", "y+z", "2p/(p-1)", 2, "[(1,2)]", "sum(l=1..p-1)[(1+l/p,2)] + [(2,4)]", "computed",
       "p=3..6"},
      {"T_p,q,inf", "xyz+x^p+y^q", "z", "p*q/(p*q-p-q)", 1, "0",
       "sum(l=1..p-1)[(1+l/p,2)] + [(2,4)] + sum(l=1..q-1)[(1+l/q,2)]", "computed", "p=3..5,q=p..6"},
  };
}

long SlcReport::passed() const {
  long c = 0;
  for (const auto& r : rows) c += r.ok ? 1 : 0;
  return c;
}

namespace {

const char* kDInfIso = "[(9/8,2)] + [(11/8,2)] + [(3/2,2)] + [(13/8,2)] + [(15/8,2)]";

struct Model {
  MixedSpectrum iso;
  long branches = 0;
  Rat beta;
  std::string g;
  std::optional<Spectrum> oracle;
  std::optional<MixedSpectrum> jk;  // J-family closed form for the same germ
};

// Parameter ranges "p=3..5,q=p..6"; returns every assignment.
std::vector<Env> expand_params(const std::string& spec) {
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> ranges;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto eq = tok.find('='), dots = tok.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq)
      throw ParseError("bad parameter range '" + tok + "'");
    ranges.push_back({tok.substr(0, eq), {tok.substr(eq + 1, dots - eq - 1), tok.substr(dots + 2)}});
  }
  std::vector<Env> out;
  std::function<void(size_t, Env)> rec = [&](size_t i, Env env) {
    if (i == ranges.size()) {
      out.push_back(env);
      return;
    }
    Rat lo = eval_expr(ranges[i].second.first, env), hi = eval_expr(ranges[i].second.second, env);
    for (Rat v = lo; v <= hi; v += 1) {
      env[ranges[i].first] = v;
      rec(i + 1, env);
    }
  };
  rec(0, {});
  return out;
}

long param(const Env& env, const std::string& name) { return to_long(env.at(name).get_num()); }

Model build_model(const SlcRow& row, const Env& env, long r) {
  Model m;
  m.beta = 0;
  const std::string& s = row.symbol;
  if (s == "A_inf") {
    m.iso = qh_spectrum(WeightVector::from({make_rat(1, 2), make_rat(1, 2), make_rat(1, r)}));
    m.branches = 1;
    m.g = "z";
  } else if (s == "D_inf") {
    m.iso = eval_spectrum_formula(kDInfIso);
    m.branches = 1;
    m.beta = make_rat(1, 2);
    m.g = "z-y";
    m.jk = jk_infinity(1);
  } else if (s == "T_2,inf,inf") {
    m.iso = newton_mixed_spectrum_nonsimple(build_newton(t2qr_support(r, r)));
    m.branches = 2;
    m.g = "z-y";
    m.oracle = tpqr_closed_form({2, r, r});
  } else if (s == "T_2,q,inf") {
    long q = param(env, "q");
    m.iso = newton_mixed_spectrum_nonsimple(build_newton(t2qr_support(q, r)));
    m.branches = 1;
    m.g = "z";
    m.oracle = tpqr_closed_form({2, q, r});
    if (q == 3) m.jk = jk_infinity(2);
  } else if (s == "T_inf,inf,inf") {
    m.iso = newton_mixed_spectrum_nonsimple(build_newton(tpqr_support(r, r, r)));
    m.branches = 3;
    m.g = "x+y+z";
    m.oracle = tpqr_closed_form({r, r, r});
  } else if (s == "T_p,inf,inf") {
    long p = param(env, "p");
    m.iso = newton_mixed_spectrum_nonsimple(build_newton(tpqr_support(p, r, r)));
    m.branches = 2;
    m.g = "y+z";
    m.oracle = tpqr_closed_form({p, r, r});
  } else if (s == "T_p,q,inf") {
    long p = param(env, "p"), q = param(env, "q");
    m.iso = newton_mixed_spectrum_nonsimple(build_newton(tpqr_support(p, q, r)));
    m.branches = 1;
    m.g = "z";
    m.oracle = tpqr_closed_form({p, q, r});
  } else {
    throw DomainError("no isolated model for row " + s);
  }
  return m;
}

std::string env_label(const Env& env) {
  std::string out;
  for (const auto& [k, v] : env) out += (out.empty() ? "" : ",") + k + "=" + to_string(v);
  return out.empty() ? "" : " (" + out + ")";
}

}  // namespace

SlcReport check_slc_rows(const std::vector<SlcRow>& rows) {
  SlcReport rep;
  for (const SlcRow& row : rows) {
    SlcRowCheck chk;
    chk.symbol = row.symbol;
    auto fail = [&](const Env& env, const std::string& msg) {
      chk.failures.push_back(row.symbol + env_label(env) + ": " + msg);
    };
    std::vector<Env> envs;
    try {
      envs = row.params.empty() ? std::vector<Env>{Env{}} : expand_params(row.params);
    } catch (const Error& e) {
      fail({}, e.what());
    }
    for (const Env& env : envs) {
      ++chk.instances;
      try {
        Rat rfrak = eval_expr(row.r_frak, env);
        long r = std::max<long>(2, to_long(floor_int(rfrak)) + 1);
        Model m = build_model(row, env, r);
        if (m.g != row.g) fail(env, "g column " + row.g + " differs from the model's " + m.g);
        if (m.branches != row.N)
          fail(env, "N column " + std::to_string(row.N) + " differs from " + std::to_string(m.branches) + " branches");
        if (row.iso_provenance == "computed" && !support_check(2, m.iso).ok)
          fail(env, "isolated model fails the support and symmetry check");
        if (m.oracle && !(project(m.iso) == *m.oracle)) fail(env, "isolated model disagrees with the closed form");
        MixedSpectrum sigma1 = eval_spectrum_formula(row.sigma1, env);
        MixedSpectrum expected = eval_spectrum_formula(row.sigma2, env);
        SSSResult res = sss_difference(m.iso, a_infinity_branches(m.branches, m.beta), r, sigma1);
        if (!(res.sigma2 == expected))
          fail(env, "sigma2 = " + to_string(res.sigma2) + ", table has " + to_string(expected));
        if (m.jk && !(*m.jk == expected)) fail(env, "J-family closed form " + to_string(*m.jk) + " differs");
      } catch (const Error& e) {
        fail(env, e.name() + ": " + e.what());
      }
    }
    chk.ok = chk.failures.empty() && chk.instances > 0;
    rep.rows.push_back(std::move(chk));
  }
  return rep;
}

SlcReport slc_table() {
  SlcReport rep = check_slc_rows(slc_rows());
  std::string msg;
  for (const auto& r : rep.rows)
    for (const auto& f : r.failures) msg += (msg.empty() ? "" : "; ") + f;
  if (!msg.empty()) throw MismatchReport(msg);
  return rep;
}

}  // namespace spectre
