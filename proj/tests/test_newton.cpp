#include <gtest/gtest.h>

#include "spectre/errors.hpp"
#include "spectre/newton.hpp"
#include "spectre/newton_spectrum.hpp"
#include "spectre/weighted.hpp"
#include "support/fixtures.hpp"
#include "support/rng.hpp"

using namespace spectre;
using spectre::testing::newton;

TEST(BuildNewton, NodeSegment) {
  auto nd = newton({{2, 0}, {0, 2}});
  ASSERT_EQ(nd.compact.size(), 1u);
  EXPECT_EQ(nd.normal(0), (QVec{make_rat(1, 2), make_rat(1, 2)}));
  EXPECT_TRUE(nd.convenient);
}

TEST(BuildNewton, OcticCurveHasFourFacets) {
  auto nd = build_newton(spectre::testing::curve8_support());
  EXPECT_EQ(nd.compact.size(), 4u);
  EXPECT_TRUE(structure_flags(nd).simple);
}

TEST(BuildNewton, T334HasThreeFacets) {
  auto nd = newton({{1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 4}});
  EXPECT_EQ(nd.compact.size(), 3u);
  auto f = structure_flags(nd);
  EXPECT_FALSE(f.simple);
  EXPECT_TRUE(f.regular_simplicial);
}

TEST(BuildNewton, NotConvenient) {
  auto nd = newton({{2, 1}, {0, 3}});
  EXPECT_FALSE(nd.convenient);
  EXPECT_THROW(require_convenient(nd), NotConvenient);
  EXPECT_THROW(h_value(nd, IVec{1, 1}), NotConvenient);
}

TEST(BuildNewton, InvalidMonomials) {
  MonomialData m;
  m.nvars = 2;
  EXPECT_THROW(build_newton(m), DomainError);
  m.exponents = {{1, 2}, {1, 2}};
  EXPECT_THROW(build_newton(m), DomainError);
}

TEST(HValue, Examples) {
  EXPECT_EQ(h_value(newton({{2, 0}, {0, 2}}), IVec{1, 1}), 1);
  auto node3 = build_newton(spectre::testing::fermat_support({2, 2, 2, 2}));
  EXPECT_EQ(h_value(node3, IVec{1, 1, 1, 1}), 2);
  EXPECT_EQ(h_value(newton({{1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 4}}), IVec{1, 1, 1}), 1);
}

TEST(CountInterior, Examples) {
  auto nd = newton({{1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  auto top = nd.find_face({0, 1, 2, 3});
  ASSERT_TRUE(top.has_value());
  EXPECT_EQ(count_interior(nd, {*top, 1, false}, false).value, 1);

  auto ex = build_newton(spectre::testing::curve8_support());
  LatticeCounter lc(ex);
  long s = 0;
  for (const auto& [I, f] : ex.strata(2)) s += lc.hull_count(f, 1, make_rat(1, 2));
  EXPECT_EQ(s, 1);

  auto q = newton({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}});
  auto tri = q.find_face({0, 1, 2});
  ASSERT_TRUE(tri.has_value());
  EXPECT_EQ(count_interior(q, {*tri, 1, false}, false).value, 3);
}

TEST(StructureFlags, Fermat) {
  auto f = structure_flags(build_newton(spectre::testing::fermat_support({2, 3, 5})));
  EXPECT_TRUE(f.simple);
  EXPECT_TRUE(f.regular_simplicial);
}

namespace {

std::vector<MonomialData> oracle_corpus() {
  std::vector<MonomialData> c = {
      spectre::testing::curve8_support(),
      spectre::testing::support({{1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 4}}),
      spectre::testing::support({{2, 0, 0}, {0, 3, 0}, {0, 2, 2}, {0, 0, 7}}),
      spectre::testing::support({{3, 0, 0}, {0, 3, 0}, {1, 0, 3}, {0, 1, 3}}),
  };
  for (const auto& d : spectre::testing::route_corpus()) c.push_back(spectre::testing::fermat_support(d));
  return c;
}

}  // namespace

TEST(CountInterior, MatchesBruteForce) {
  for (const auto& m : oracle_corpus()) {
    auto nd = build_newton(m);
    for (size_t f = 0; f < nd.faces.size(); ++f)
      for (long l = 1; l <= 3; ++l)
        for (bool hull : {false, true}) {
          PolytopeSpec spec{f, l, hull};
          auto a = count_interior(nd, spec, true);
          auto b = count_interior_bruteforce(nd, spec, true);
          ASSERT_EQ(a.value, b.value);
          ASSERT_EQ(*a.by_residue, *b.by_residue);
          long sum = 0;
          for (const auto& [lambda, v] : *a.by_residue) sum += v;
          EXPECT_EQ(sum, a.value);
        }
  }
}

TEST(FaceLattice, ClosedUnderIntersection) {
  for (const auto& m : oracle_corpus()) {
    auto nd = build_newton(m);
    for (size_t a = 0; a < nd.faces.size(); ++a)
      for (size_t b = a + 1; b < nd.faces.size(); ++b) {
        std::vector<size_t> common;
        std::set_intersection(nd.faces[a].points.begin(), nd.faces[a].points.end(), nd.faces[b].points.begin(),
                              nd.faces[b].points.end(), std::back_inserter(common));
        if (!common.empty()) EXPECT_TRUE(nd.find_face(common).has_value());
      }
  }
}

TEST(HValue, MembershipProperty) {
  spectre::testing::Rng g(7);
  auto nd = build_newton(spectre::testing::curve8_support());
  for (int it = 0; it < 200; ++it) {
    IVec x{g.range(0, 9), g.range(0, 9)};
    Rat h = h_value(nd, x);
    bool in_delta = true;
    for (const auto& f : nd.facets) {
      Rat v = dot(f.a, to_qvec(x));
      if (v < f.b) in_delta = false;
    }
    EXPECT_EQ(h >= 1, in_delta);
  }
}
