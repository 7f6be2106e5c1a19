#include <gtest/gtest.h>

#include "spectre/cyclotomic.hpp"
#include "spectre/errors.hpp"
#include "spectre/schoen.hpp"
#include "support/fixtures.hpp"
#include "support/rng.hpp"

using namespace spectre;

namespace {

std::vector<QPoly> point(const std::vector<Rat>& xs) {
  std::vector<QPoly> p;
  for (const auto& x : xs) p.push_back(QPoly::constant(x));
  return p;
}

NodalFamily rational_family(int m, long degree, spectre::testing::Rng& g, size_t count) {
  NodalFamily fam;
  fam.m = m;
  fam.degree = degree;
  for (size_t i = 0; i < count; ++i) {
    std::vector<Rat> xs;
    for (int j = 0; j < 2 * m + 1; ++j) xs.push_back(make_rat(g.range(-40, 40), g.range(1, 9)));
    xs[0] = 1;
    fam.nodes.push_back(point(xs));
  }
  return fam;
}

}  // namespace

TEST(Cyclotomic, FieldArithmetic) {
  EXPECT_EQ(cyclotomic_polynomial(5), QPoly({1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), QPoly({1, -1, 1}));
  CyclotomicField f(5);
  EXPECT_EQ(f.zeta_pow(5), f.from_rat(1));
  EXPECT_EQ(f.zeta_pow(-1), f.zeta_pow(4));
  auto a = f.parse("1-2/3*zeta+zeta^3");
  EXPECT_EQ(f.mul(a, f.inv(a)), f.from_rat(1));
  EXPECT_EQ(f.parse(f.to_string(a)), a);
  EXPECT_THROW(f.inv(QPoly{}), DomainError);
  EXPECT_THROW(f.parse("zeta^"), ParseError);
}

TEST(Cyclotomic, PrimeImages) {
  auto ps = cyclotomic_primes(5, 2, 1u << 30);
  ASSERT_EQ(ps.size(), 2u);
  for (const auto& p : ps) {
    EXPECT_TRUE(is_prime_u64(p.p));
    EXPECT_EQ(p.p % 5, 1u);
    EXPECT_EQ(powmod(p.omega, 5, p.p), 1u);
    EXPECT_NE(p.omega, 1u);
    EXPECT_EQ(p.map(cyclotomic_polynomial(5)), 0u);
  }
  EXPECT_LT(ps[0].p, ps[1].p);
}

TEST(Cyclotomic, ExactRankMatchesModular) {
  CyclotomicField f(3);
  std::vector<std::vector<QPoly>> m = {{f.from_rat(1), f.zeta_pow(1)}, {f.zeta_pow(2), f.from_rat(1)}};
  EXPECT_EQ(rank_exact(m, f), 1u);
  auto p = cyclotomic_primes(3, 1, 1000)[0];
  std::vector<std::vector<uint64_t>> mm = {{p.map(m[0][0]), p.map(m[0][1])}, {p.map(m[1][0]), p.map(m[1][1])}};
  EXPECT_EQ(rank_mod_p(mm, p.p), 1u);
}

TEST(EvaluationRank, ZeroNodes) {
  NodalFamily fam;
  fam.m = 2;
  fam.degree = 5;
  auto r = evaluation_rank(fam);
  EXPECT_EQ(r.r, 0);
  EXPECT_EQ(r.phantom, 0);
}

TEST(EvaluationRank, SingleNode) {
  for (long d = 3; d <= 6; ++d) {
    NodalFamily fam;
    fam.m = 1;
    fam.degree = d;
    fam.nodes = {point({1, 2, 3})};
    auto r = evaluation_rank(fam);
    EXPECT_EQ(r.r, 1);
    EXPECT_EQ(r.phantom, 0);
  }
}

TEST(EvaluationRank, DegenerateSection) {
  NodalFamily fam;
  fam.m = 1;
  fam.degree = 2;
  EXPECT_THROW(evaluation_rank(fam), DegenerateSection);
}

TEST(EvaluationRank, RejectsCoincidentNodes) {
  NodalFamily fam;
  fam.m = 1;
  fam.degree = 4;
  fam.nodes = {point({1, 2, 3}), point({2, 4, 6})};
  EXPECT_THROW(evaluation_rank(fam), DomainError);
}

TEST(EvaluationRank, GeneralPositionHasNoPhantom) {
  spectre::testing::Rng g(99);
  for (int it = 0; it < 10; ++it) {
    auto fam = rational_family(1, 5, g, static_cast<size_t>(g.range(1, 6)));
    auto r = evaluation_rank(fam);
    EXPECT_EQ(r.phantom, 0);
    auto fam2 = rational_family(2, 5, g, static_cast<size_t>(g.range(1, 5)));
    EXPECT_EQ(evaluation_rank(fam2).phantom, 0);
  }
}

TEST(EvaluationRank, Monotone) {
  spectre::testing::Rng g(5);
  auto fam = rational_family(1, 3, g, 12);
  long prev_d = -1;
  for (long d = 3; d <= 7; ++d) {
    fam.degree = d;
    long r = evaluation_rank(fam).r;
    EXPECT_GE(r, prev_d);
    prev_d = r;
  }
  fam.degree = 5;
  long prev_n = 0;
  NodalFamily sub = fam;
  sub.nodes.clear();
  for (const auto& node : fam.nodes) {
    sub.nodes.push_back(node);
    long r = evaluation_rank(sub).r;
    EXPECT_GE(r, prev_n);
    EXPECT_LE(r, prev_n + 1);
    prev_n = r;
  }
  EXPECT_EQ(prev_n, 6);
}

TEST(Dwork, NodesAndRank) {
  auto fam = dwork_quintic_nodes();
  auto F = dwork_quintic();
  ASSERT_EQ(fam.nodes.size(), 125u);
  EXPECT_EQ(verified_nodes(fam, F), 125);
  EXPECT_TRUE(node_verify(fam, F));
  auto r = evaluation_rank(fam);
  EXPECT_EQ(r.r, 101);
  EXPECT_EQ(r.phantom, 24);
  EXPECT_EQ(r.r + r.phantom, 125);
  EXPECT_EQ(r.sections, 126);
  ASSERT_EQ(r.prime_ranks.size(), 2u);
  EXPECT_EQ(r.prime_ranks[0].second, r.prime_ranks[1].second);
}

TEST(NodeVerify, Negatives) {
  auto fam = dwork_quintic_nodes();
  auto F = dwork_quintic();
  NodalFamily empty = fam;
  empty.nodes.clear();
  EXPECT_FALSE(node_verify(empty, F));
  NodalFamily perturbed = fam;
  perturbed.nodes.resize(1);
  perturbed.nodes[0][1] += QPoly::constant(make_rat(1, 7));
  EXPECT_FALSE(node_verify(perturbed, F));
  auto fermat = spectre::testing::fermat_support({5, 5, 5, 5, 5});
  EXPECT_FALSE(node_verify(fam, fermat));
  EXPECT_EQ(verified_nodes(fam, fermat), 0);
}
