#include <gtest/gtest.h>

#include "spectre/errors.hpp"
#include "spectre/newton_spectrum.hpp"
#include "spectre/nonisolated.hpp"
#include "spectre/weighted.hpp"
#include "support/fixtures.hpp"

using namespace spectre;
using spectre::testing::ms;

namespace {

BranchData single_branch(const Rat& beta) {
  Branch b;
  b.lim_spectrum = ms("[(1,2)]");
  b.betas = {beta};
  b.mu = 1;
  return BranchData{{b}};
}

long below_one(const MixedSpectrum& s) {
  long c = 0;
  for (const auto& [k, m] : s.entries())
    if (k.first < 1) c += m;
  return c;
}

}  // namespace

TEST(Sss, DInfinity) {
  auto iso = ms("[(9/8,2)] + [(11/8,2)] + [(3/2,2)] + [(13/8,2)] + [(15/8,2)]");
  auto r = sss_difference(iso, single_branch(make_rat(1, 2)), 4);
  EXPECT_EQ(r.difference, ms("[(3/2,2)]"));
  EXPECT_EQ(sss_correction(single_branch(make_rat(1, 2)), 4),
            ms("[(9/8,2)] + [(11/8,2)] + [(13/8,2)] + [(15/8,2)]"));
}

TEST(Sss, J2SpectrumLevel) {
  auto iso = qh_spectrum(WeightVector::parse("1/2,1/3,1/6"));
  auto r = sss_difference(iso, single_branch(0), 6);
  EXPECT_EQ(project(r.difference), project(ms("[(4/3,2)] + [(3/2,2)] + [(5/3,2)] + [(2,4)]")));
  EXPECT_EQ(project(r.difference), project(jk_infinity(2)));
}

TEST(Sss, BranchFree) {
  auto iso = spectre::testing::e7_spectrum();
  EXPECT_EQ(sss_difference(iso, BranchData{}, 5).difference, iso);
}

TEST(Sss, Sigma1AndNegativeFinal) {
  auto iso = ms("[(9/8,2)] + [(11/8,2)] + [(3/2,2)] + [(13/8,2)] + [(15/8,2)]");
  auto r = sss_difference(iso, single_branch(make_rat(1, 2)), 4, ms("[(1,2)]"));
  EXPECT_TRUE(r.has_sigma1);
  EXPECT_EQ(r.sigma2, ms("[(1,2)] + [(3/2,2)]"));
  EXPECT_THROW(sss_difference(MixedSpectrum{}, single_branch(make_rat(1, 2)), 4, MixedSpectrum{}),
               NegativeFinalSpectrum);
}

TEST(Sss, InvalidBranchData) {
  Branch b;
  b.lim_spectrum = ms("2[(1,2)]");
  b.betas = {0};
  EXPECT_THROW(BranchData{{b}}.validate(), DomainError);
  b.betas = {0, 1};
  EXPECT_THROW(BranchData{{b}}.validate(), DomainError);
}

TEST(JkInfinity, Examples) {
  EXPECT_EQ(jk_infinity(1), ms("[(3/2,2)]"));
  EXPECT_EQ(jk_infinity(2), ms("[(4/3,2)] + [(3/2,2)] + [(5/3,2)] + [(2,4)]"));
  auto k3 = ms("[(17/18,2)] + [(37/18,2)]");
  for (int m = 1; m <= 5; ++m) k3.add(make_rat(21 + 2 * m, 18), 2, 1);
  EXPECT_EQ(jk_infinity(3), k3);
  EXPECT_EQ(below_one(jk_infinity(3)), 1);
}

TEST(JkInfinity, PipelineAndOrders) {
  for (long k = 1; k <= 8; ++k) {
    SCOPED_TRACE(k);
    auto j = jk_infinity(k);
    auto p = jk_sss_pipeline(k);
    EXPECT_TRUE(p.cancels);
    EXPECT_EQ(p.sigma2, j);
    EXPECT_EQ(project(p.raw.difference), project(j));
    if (k > 1) EXPECT_EQ(tss_order(j), k % 2 ? 6 * k : 3 * k);
    EXPECT_EQ(below_one(j), (k - 1) / 2);
    EXPECT_EQ(j.mult(2, 4) == 1, k % 2 == 0);
    EXPECT_EQ(jk_pg_bound({k}), below_one(j));
  }
}

TEST(JkInfinity, KappaOneDegeneratesToOrderTwo) { EXPECT_EQ(tss_order(jk_infinity(1)), 2); }

TEST(JkPgBound, Examples) {
  EXPECT_EQ(jk_pg_bound({4}), 1);
  EXPECT_EQ(jk_pg_bound({1, 1, 1, 1}), 0);
  EXPECT_EQ(jk_pg_bound({3, 3}), 2);
  EXPECT_THROW(jk_pg_bound({0}), DomainError);
}

TEST(CsDiscrepancy, Examples) {
  auto r = cs_discrepancy(2, 8, std::nullopt, 0, true);
  EXPECT_EQ(r.r_a, 8);
  EXPECT_TRUE(r.equality);
  EXPECT_THROW(cs_discrepancy(2, 5, 3, 3, true), BoundViolated);
  auto b = cs_discrepancy(4, 2, std::nullopt, std::nullopt, false);
  EXPECT_EQ(b.delta, 2);
  EXPECT_FALSE(b.r_a.has_value());
  EXPECT_FALSE(b.equality);
  EXPECT_THROW(cs_discrepancy(3, 2, std::nullopt, std::nullopt, false), DomainError);
  EXPECT_THROW(cs_discrepancy(2, 4, 1, 1, true), BoundViolated);
}

TEST(SlcTable, AllRowsPass) {
  auto rep = slc_table();
  ASSERT_EQ(rep.rows.size(), 7u);
  EXPECT_EQ(rep.passed(), 7);
  for (const auto& r : rep.rows) EXPECT_GT(r.instances, 0) << r.symbol;
}

TEST(SlcTable, RowExamples) {
  Env p3{{"p", 3}};
  EXPECT_EQ(eval_spectrum_formula("sum(l=1..p-1)[(1+l/p,2)] + [(2,4)]", p3),
            ms("[(4/3,2)] + [(5/3,2)] + [(2,4)]"));
  for (const auto& r : slc_rows()) {
    if (r.symbol == "T_inf,inf,inf") {
      EXPECT_EQ(eval_spectrum_formula(r.sigma1), ms("2[(1,2)]"));
      EXPECT_EQ(eval_spectrum_formula(r.sigma2), ms("[(2,4)]"));
    }
    if (r.symbol == "A_inf") EXPECT_TRUE(eval_spectrum_formula(r.sigma2).empty());
    if (r.symbol == "T_p,inf,inf") {
      EXPECT_EQ(eval_spectrum_formula(r.sigma2, p3), ms("[(4/3,2)] + [(5/3,2)] + [(2,4)]"));
      EXPECT_EQ(eval_spectrum_formula(r.sigma1, p3), ms("[(1,2)]"));
    }
  }
}

TEST(SlcTable, CorruptedRowReported) {
  auto rows = slc_rows();
  rows[0].sigma2 = "[(3/2,2)]";
  auto rep = check_slc_rows(rows);
  EXPECT_FALSE(rep.rows[0].ok);
  EXPECT_FALSE(rep.rows[0].failures.empty());
}

TEST(TpqrClosedForm, MatchesBrieskorn) {
  for (long p = 3; p <= 4; ++p)
    for (long q = p; q <= 5; ++q)
      for (long r = q; r <= 6; ++r) {
        if (p * q * r <= p * q + q * r + r * p) continue;
        auto nd = build_newton(tpqr_support(p, q, r));
        EXPECT_EQ(brieskorn_poincare(nd), tpqr_closed_form({p, q, r}));
        EXPECT_EQ(project(newton_mixed_spectrum_nonsimple(nd)), tpqr_closed_form({p, q, r}));
      }
}

TEST(Formula, Grammar) {
  EXPECT_EQ(eval_expr("p*q/(p*q-p-q)", {{"p", 3}, {"q", 6}}), 2);
  EXPECT_EQ(eval_expr("2q+1", {{"q", 3}}), 7);
  EXPECT_EQ(eval_spectrum_formula("2[(1,2)] - [(1,2)]"), ms("[(1,2)]"));
  EXPECT_TRUE(eval_spectrum_formula("sum(l=1..0)[(l,2)]").empty());
  EXPECT_THROW(eval_spectrum_formula("[(1,2"), ParseError);
  EXPECT_THROW(eval_expr("x+1"), ParseError);
}
