#include <gtest/gtest.h>

#include "spectre/classify.hpp"
#include "spectre/errors.hpp"
#include "spectre/newton_spectrum.hpp"
#include "spectre/weighted.hpp"
#include "support/fixtures.hpp"

using namespace spectre;
using spectre::testing::ms;
using spectre::testing::newton;

TEST(Invariants, E7Surface) {
  auto r = invariants(2, spectre::testing::e7_spectrum());
  EXPECT_EQ(r.sigma_min, 1);
  EXPECT_EQ(r.lct, 1);
  EXPECT_TRUE(r.du_bois);
  EXPECT_FALSE(r.rational);
  EXPECT_EQ(r.max_k_lc, 0);
  EXPECT_EQ(r.lambda_f, 1);
  EXPECT_EQ(r.gen_level_bound, 1);
  EXPECT_EQ(r.jumping_in_unit, (std::vector<Rat>{1}));
}

TEST(Invariants, NodeThreefold) {
  auto r = invariants(3, ms("[(2,4)]"));
  EXPECT_EQ(r.max_k_lc, 1);
  EXPECT_TRUE(is_k_log_canonical(r, 1));
  EXPECT_FALSE(is_k_rational(r, 1));
  EXPECT_TRUE(is_k_rational(r, 0));
}

TEST(Invariants, A1Surface) {
  auto r = invariants(2, ms("[(3/2,2)]"));
  EXPECT_TRUE(r.rational);
  EXPECT_TRUE(r.du_bois);
  EXPECT_EQ(r.lct, 1);
  EXPECT_TRUE(r.jumping_in_unit.empty());
}

TEST(Invariants, LowThreshold) {
  auto r = invariants(1, spectre::testing::curve8_spectrum());
  EXPECT_EQ(r.lct, make_rat(1, 2));
  EXPECT_EQ(r.max_k_lc, -1);
  EXPECT_FALSE(r.du_bois);
  EXPECT_EQ(r.jumping_in_unit, (std::vector<Rat>{make_rat(1, 2), make_rat(2, 3), make_rat(5, 6), Rat(1)}));
}

TEST(Invariants, RejectsInvalid) {
  EXPECT_THROW(invariants(1, ms("[(0,0)]")), InvalidSpectrum);
}

TEST(NewtonLc, Examples) {
  auto node = newton({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  EXPECT_TRUE(newton_lc_tests(node).lc);
  EXPECT_TRUE(newton_lc_tests(node).rational);
  auto e6 = newton({{1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  EXPECT_TRUE(newton_lc_tests(e6).lc);
  EXPECT_FALSE(newton_lc_tests(e6).rational);
  EXPECT_FALSE(newton_lc_tests(newton({{4, 0, 0}, {0, 4, 0}, {0, 0, 3}})).lc);
  EXPECT_THROW(newton_lc_tests(newton({{2, 1}, {0, 3}})), NotConvenient);
}

TEST(NewtonKlc, Examples) {
  auto node = build_newton(spectre::testing::fermat_support({2, 2, 2, 2}));
  EXPECT_TRUE(newton_klc_sufficient(node, 2).ge_c);
  auto e6 = build_newton(spectre::testing::fermat_support({3, 3, 3}));
  EXPECT_TRUE(newton_klc_sufficient(e6, 1).ge_c);
  EXPECT_FALSE(newton_klc_sufficient(e6, 1).gt_c);
  EXPECT_THROW(newton_klc_sufficient(newton({{1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 4}}), 1), ConditionIIIViolated);
}

TEST(Kulikov, TypeTriple) {
  EXPECT_EQ(kulikov_type(build_newton(spectre::testing::fermat_support({2, 2, 2, 2}))).type, 1);
  EXPECT_EQ(kulikov_type(newton({{1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}})).type, 2);
  EXPECT_EQ(kulikov_type(build_newton(spectre::testing::fermat_support({3, 3, 3}))).type, 2);
  auto t = kulikov_type(newton({{1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 4}}));
  EXPECT_EQ(t.type, 3);
  EXPECT_FALSE(t.witness.empty());
  EXPECT_THROW(kulikov_type(build_newton(spectre::testing::curve8_support())), OutsidePositiveOrthantLogic);
}

TEST(Kulikov, ConvenientPureTailsAreTypeOne) {
  long seen = 0;
  for (const auto& r : cy_rows()) {
    if (r.table != 1) continue;
    auto nd = build_newton(spectre::testing::support(r.monomials));
    if (!nd.convenient) continue;
    ++seen;
    auto k = kulikov_type(nd);
    EXPECT_EQ(k.type, 1) << r.form;
    EXPECT_NE(k.witness.find("int(Delta_I), |I| = 1"), std::string::npos) << k.witness;
    EXPECT_LT(spectral_min(qh_spectrum(weights_from_monomials(spectre::testing::support(r.monomials)))), 1);
  }
  EXPECT_GT(seen, 0);
}

TEST(GenusBound, Examples) {
  EXPECT_EQ(genus_bound(3, 3, false), 0);
  EXPECT_EQ(genus_bound(1, 4, false), 3);
  EXPECT_EQ(genus_bound(3, 5, true), 5);
}

TEST(ClassifyProperty, LcEquivalenceOnCorpus) {
  std::vector<MonomialData> corpus = {spectre::testing::curve8_support(),
                                      spectre::testing::support({{8, 0}, {0, 6}, {2, 2}}),
                                      spectre::testing::support({{6, 0}, {0, 6}, {3, 1}, {1, 3}})};
  for (const auto& d : spectre::testing::route_corpus()) corpus.push_back(spectre::testing::fermat_support(d));
  for (const auto& m : corpus) {
    auto nd = build_newton(m);
    auto inv = invariants(nd.n(), vanishing_table(nd).to_mixed());
    auto lc = newton_lc_tests(nd);
    EXPECT_EQ(lc.lc, inv.sigma_min >= 1);
    EXPECT_EQ(lc.rational, inv.sigma_min > 1);
    for (int c = 1; c <= 3; ++c) {
      auto k = newton_klc_sufficient(nd, c);
      if (k.ge_c) EXPECT_GE(inv.sigma_min, c);
      if (k.gt_c) EXPECT_GT(inv.sigma_min, c);
    }
  }
}
