#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spectre/classify.hpp"
#include "spectre/errors.hpp"
#include "spectre/joins.hpp"
#include "spectre/newton_spectrum.hpp"
#include "spectre/nonisolated.hpp"
#include "spectre/schoen.hpp"
#include "spectre/weighted.hpp"
#include "support/fixtures.hpp"
#include "support/hodge.hpp"
#include "support/rng.hpp"

using namespace spectre;
using spectre::testing::ms;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::vector<CountAudit::Entry> audited;

void audit(const std::function<void(Outcome&)>& body, Outcome& o) {
  std::optional<CountAudit> a;
  a.emplace();
  body(o);
  auto e = a->entries();
  audited.insert(audited.end(), e.begin(), e.end());
}

bool run(int id, const char* name, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const Error& e) {
    o.check(false, e.name() + ": " + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= limit) o.check(false, "time limit");
  std::printf("criterion %2d %-28s %s  %7.3f s (limit %g s)%s\n", id, name, o.ok ? "PASS" : "FAIL", secs, limit,
              o.detail.str().c_str());
  std::fflush(stdout);
  return o.ok;
}

MixedSpectrum elliptic(const std::vector<Rat>& lambdas) {
  auto s = ms("[(1,3)] + [(2,3)]");
  for (const auto& l : lambdas) s.add(1 + l, 2, 1);
  return s;
}

long below_one(const MixedSpectrum& s) {
  long c = 0;
  for (const auto& [k, m] : s.entries())
    if (k.first < 1) c += m;
  return c;
}

std::vector<MonomialData> route_supports() {
  std::vector<MonomialData> c;
  for (const auto& d : spectre::testing::route_corpus()) c.push_back(spectre::testing::fermat_support(d));
  return c;
}

void golden_spectra(Outcome& o) {
  auto t = make_rat(1, 3), f = make_rat(1, 4), s = make_rat(1, 6), h = make_rat(1, 2);
  o.check(qh_spectrum(WeightVector::parse("1/3,1/3,1/3")) == elliptic({t, t, t, 2 * t, 2 * t, 2 * t}), "E6");
  o.check(qh_spectrum(WeightVector::parse("1/2,1/4,1/4")) == elliptic({f, f, h, h, h, 3 * f, 3 * f}), "E7");
  o.check(qh_spectrum(WeightVector::parse("1/2,1/3,1/6")) == elliptic({s, t, t, h, h, 2 * t, 2 * t, 5 * s}), "E8");
  o.check(qh_spectrum(WeightVector::parse("1/2,1/4,1/4")) == spectre::testing::e7_spectrum(), "E7 mixed");
  auto k5 = fermat_spectrum({5, 5, 5, 5});
  o.check(spectre::testing::vpq(k5, 0, 3) == 1, "v03");
  o.check(spectre::testing::vpq(k5, 1, 3) == 4, "v13");
  auto k5n4 = fermat_spectrum({5, 5, 5, 5, 5});
  o.check(k5n4.total() == 1024 && spectral_min(k5n4) == 1, "5^5 statistics");
  o.check(spectre::testing::vpq(k5n4, 0, 4) == 0 && spectre::testing::vpq(k5n4, 1, 4) == 1, "5^5 v04 v14");
  o.detail << " E6/E7/E8, Fermat k=5 v^{0,3}=1 v^{1,3}=4";
}

void newton_route(Outcome& o) {
  auto nd = build_newton(spectre::testing::curve8_support());
  LatticeCounter lc(nd);
  auto t = vanishing_table(lc);
  o.check(t.to_mixed() == spectre::testing::curve8_spectrum(), "mixed spectrum");
  o.check(t.at(1, 1, 0) == 3, "h11_0");
  o.check(t.at(1, 1, make_rat(1, 2)) == 1 && t.at(0, 0, make_rat(1, 2)) == 1, "h_{1/2}");
  o.check(t.at(0, 1, make_rat(2, 3)) == 2 && t.at(0, 1, make_rat(5, 6)) == 2, "h01");
  o.check(t.at(1, 0, make_rat(1, 3)) == 2 && t.at(1, 0, make_rat(1, 6)) == 2, "h10");
  o.detail << " " << to_string(t.to_mixed());
}

void join_calculus(Outcome& o) {
  o.check(join(spectre::testing::curve8_spectrum(), ms("[(1,2)]")) == spectre::testing::curve8_join_a1_spectrum(), "octic join");
  spectre::testing::Rng g(20261016);
  int good = 0;
  for (int i = 0; i < 50; ++i) {
    auto s = spectre::testing::random_spectrum(g, 6, true);
    if (suspend(suspend(s, 2), 2) == tate_shift(s, 1)) ++good;
  }
  o.check(good == 50, "suspend^2 = tate_shift");
  o.detail << " suspend^2 = tate_shift on " << good << "/50";
}

void route_agreement(Outcome& o) {
  long n_ok = 0;
  auto corpus = spectre::testing::route_corpus();
  for (const auto& d : corpus) {
    auto nd = build_newton(spectre::testing::fermat_support(d));
    std::vector<Rat> w;
    long mu = 1;
    for (long di : d) {
      w.push_back(make_rat(1, di));
      mu *= di - 1;
    }
    auto qh = qh_spectrum(WeightVector::from(w));
    auto dan = vanishing_table(nd).to_mixed();
    auto bp = brieskorn_poincare(nd);
    bool ok = qh == dan && project(dan) == bp && support_check(nd.n(), dan).ok && iota(nd.n(), dan) == dan &&
              dan.total() == mu;
    if (ok) ++n_ok;
    std::ostringstream name;
    for (long di : d) name << di << ",";
    o.check(ok, "degrees " + name.str());
  }
  o.check(corpus.size() >= 20, "corpus size");
  o.detail << " " << n_ok << "/" << corpus.size() << " supports";
}

void cy_tables(Outcome& o) {
  long pass = 0;
  auto checks = check_cy_rows(cy_rows());
  for (const auto& c : checks) {
    if (c.ok) ++pass;
    o.check(c.ok, "table " + std::to_string(c.table) + " row " + std::to_string(c.yonemura));
  }
  o.check(checks.size() == 30, "30 rows");
  o.detail << " " << pass << "/" << checks.size() << " rows";
}

void classifiers(Outcome& o) {
  long agree = 0, total = 0;
  auto corpus = route_supports();
  for (const auto& m : corpus) {
    auto nd = build_newton(m);
    auto inv = invariants(nd.n(), vanishing_table(nd).to_mixed());
    auto lc = newton_lc_tests(nd);
    ++total;
    if (lc.lc == (inv.sigma_min >= 1) && lc.rational == (inv.sigma_min > 1)) ++agree;
  }
  o.check(agree == total, "lc equivalence");
  auto witness = build_newton(spectre::testing::support({{4, 0, 0}, {0, 4, 0}, {0, 0, 3}}));
  auto wmin = spectral_min(qh_spectrum(WeightVector::parse("1/4,1/4,1/3")));
  o.check(!newton_lc_tests(witness).lc && wmin < 1, "non-lc witness");
  int k1 = kulikov_type(build_newton(spectre::testing::fermat_support({2, 2, 2, 2}))).type;
  int k2 = kulikov_type(spectre::testing::newton({{1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}})).type;
  int k3 = kulikov_type(spectre::testing::newton({{1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 4}})).type;
  o.check(k1 == 1 && k2 == 2 && k3 == 3, "Kulikov triple");
  o.detail << " lc/rational agree " << agree << "/" << total << ", witness sigma_min " << to_string(wmin)
           << ", Kulikov " << k1 << "/" << k2 << "/" << k3;
}

void nonisolated_suite(Outcome& o) {
  auto rep = check_slc_rows(slc_rows());
  o.check(rep.passed() == 7 && rep.rows.size() == 7, "slc table");
  o.detail << " slc table " << rep.passed() << "/" << rep.rows.size();
  std::ostringstream orders;
  for (long k = 1; k <= 8; ++k) {
    auto j = jk_infinity(k);
    auto p = jk_sss_pipeline(k);
    o.check(p.cancels && p.sigma2 == j, "pipeline kappa=" + std::to_string(k));
    long want = k % 2 ? 6 * k : 3 * k;
    long got = tss_order(j);
    orders << " " << got;
    o.check(got == want, "T^ss order kappa=" + std::to_string(k) + " is " + std::to_string(got) + ", expected " +
                             std::to_string(want));
    o.check(jk_pg_bound({k}) == below_one(j), "pg witness kappa=" + std::to_string(k));
  }
  o.detail << ", T^ss orders" << orders.str();
}

void schoen_quintic(Outcome& o) {
  auto fam = dwork_quintic_nodes();
  long verified = verified_nodes(fam, dwork_quintic());
  o.check(verified == 125, "node_verify");
  RankOptions opts;
  opts.certify = true;
  auto r = evaluation_rank(fam, opts);
  o.check(r.r == 101 && r.phantom == 24, "rank");
  o.check(r.prime_ranks.size() == 2 && r.prime_ranks[0].second == r.prime_ranks[1].second, "two primes");
  o.check(r.exact_used, "exact certification");
  o.detail << " nodes " << verified << "/125, r=" << r.r << " phantom=" << r.phantom << ", ranks mod "
           << r.prime_ranks[0].first << "," << r.prime_ranks[1].first << " = " << r.prime_ranks[0].second << ","
           << r.prime_ranks[1].second << ", exact certified";
}

void clemens_schmid(Outcome& o) {
  auto r = cs_discrepancy(2, 8, std::nullopt, 0, true);
  o.check(r.r_a == 8 && r.equality, "delta=8, b=0");
  bool rejected = false;
  try {
    cs_discrepancy(2, 5, 3, 3, true);
  } catch (const BoundViolated&) {
    rejected = true;
  }
  o.check(rejected, "a+b>delta rejected");
  o.detail << " a=" << (r.r_a ? *r.r_a : -1) << ", 3+3>5 rejected";
}

void lattice_oracle(Outcome& o) {
  long bad = 0;
  for (const auto& e : audited) {
    auto b = count_interior_bruteforce(*e.newton, e.spec, e.count.by_residue.has_value());
    if (b.value != e.count.value || (e.count.by_residue && *b.by_residue != *e.count.by_residue)) ++bad;
  }
  o.check(!audited.empty(), "no counts recorded");
  o.check(bad == 0, std::to_string(bad) + " mismatches");
  o.detail << " " << audited.size() - bad << "/" << audited.size() << " counts re-verified";
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "golden spectra", 1, golden_spectra);
  ok &= run(2, "Newton route", 5, [](Outcome& o) { audit(newton_route, o); });
  ok &= run(3, "join calculus", 1, join_calculus);
  ok &= run(4, "route agreement", 120, route_agreement);
  ok &= run(5, "CY-tail tables", 30, [](Outcome& o) { audit(cy_tables, o); });
  ok &= run(6, "polytope classifiers", 60, [](Outcome& o) { audit(classifiers, o); });
  ok &= run(7, "non-isolated suite", 30, [](Outcome& o) { audit(nonisolated_suite, o); });
  ok &= run(8, "Schoen quintic", 120, schoen_quintic);
  ok &= run(9, "Clemens-Schmid arithmetic", 1, clemens_schmid);
  ok &= run(10, "lattice-count oracle", 120, lattice_oracle);
  return ok ? 0 : 1;
}
