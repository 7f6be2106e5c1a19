#include "spectre/weighted.hpp"

#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "spectre/errors.hpp"
#include "spectre/hull.hpp"
#include "spectre/poly.hpp"

namespace spectre {

WeightVector WeightVector::from(std::vector<Rat> w) {
  if (w.empty()) throw DomainError("empty weight vector");
  for (const auto& x : w)
    if (x <= 0 || x >= 1) throw DomainError("weight " + to_string(x) + " outside (0,1)");
  WeightVector r;
  r.weights = std::move(w);
  r.d = to_long(lcm_den(r.weights));
  for (const auto& x : r.weights) r.twiddle.push_back(to_long(Rat(x * r.d).get_num()));
  return r;
}

WeightVector WeightVector::parse(const std::string& csv) {
  std::vector<Rat> w;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) w.push_back(parse_rat(tok));
  return from(std::move(w));
}

MixedSpectrum qh_spectrum(const WeightVector& w) {
  // prod_i (x^{a_i} - x^d) / (1 - x^{a_i}) with x = u^{1/d}
  size_t d = static_cast<size_t>(w.d);
  QPoly num = QPoly::constant(1), den = QPoly::constant(1);
  for (long a : w.twiddle) {
    num = num * (QPoly::monomial(1, static_cast<size_t>(a)) - QPoly::monomial(1, d));
    den = den * (QPoly::constant(1) - QPoly::monomial(1, static_cast<size_t>(a)));
  }
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw NotIsolated("generating function is not a polynomial: weights do not define an isolated singularity");
  int n = w.n();
  MixedSpectrum s;
  for (size_t e = 0; e < q.coeffs().size(); ++e) {
    const Rat& c = q.coeffs()[e];
    if (c == 0) continue;
    if (!is_integer(c) || c < 0) throw NotIsolated("generating function has a non-natural coefficient");
    Rat alpha = make_rat(static_cast<long>(e), w.d);
    s.add(alpha, n + integer_indicator(alpha), to_long(c.get_num()));
  }
  return s;
}

MixedSpectrum fermat_spectrum(const IVec& degrees) {
  if (degrees.empty()) throw DomainError("empty degree vector");
  for (long x : degrees)
    if (x < 2) throw DomainError("Fermat degrees must be >= 2");
  int n = static_cast<int>(degrees.size()) - 1;
  MixedSpectrum s;
  std::vector<long> beta(degrees.size(), 0);
  std::function<void(size_t, Rat)> rec = [&](size_t i, Rat alpha) {
    if (i == degrees.size()) {
      s.add(alpha, n + integer_indicator(alpha), 1);
      return;
    }
    for (long b = 0; b <= degrees[i] - 2; ++b) rec(i + 1, alpha + make_rat(b + 1, degrees[i]));
  };
  rec(0, Rat(0));
  return s;
}

WeightVector weights_from_monomials(const MonomialData& m) {
  m.validate();
  QMat a;
  for (const auto& e : m.exponents) a.push_back(to_qvec(e));
  QVec b(a.size(), Rat(1));
  auto sol = solve(a, b, static_cast<size_t>(m.nvars));
  if (sol.kind == LinearSolution::None) throw DomainError("support is not quasi-homogeneous: m.w = 1 has no solution");
  if (sol.kind == LinearSolution::Underdetermined)
    throw UnderdeterminedWeights("m.w = 1 does not determine the weights uniquely");
  return WeightVector::from(sol.x);
}

std::vector<IVec> weight_monoid(const WeightVector& w) {
  std::vector<IVec> out;
  size_t N = w.weights.size();
  IVec x(N, 0);
  std::function<void(size_t, Rat)> rec = [&](size_t i, Rat s) {
    if (i == N) {
      if (s == 1) out.push_back(x);
      return;
    }
    for (long v = 0;; ++v) {
      Rat t = s + w.weights[i] * v;
      if (t > 1) break;
      x[i] = v;
      rec(i + 1, t);
    }
    x[i] = 0;
  };
  rec(0, Rat(0));
  return out;
}

namespace {

long genus_via_newton(const std::vector<IVec>& M, int nvars, bool brute) {
  MonomialData md;
  md.nvars = nvars;
  md.exponents = M;
  NewtonData nd = build_newton(md);
  std::vector<size_t> all(nd.points.size());
  std::iota(all.begin(), all.end(), 0);
  auto f = nd.find_face(all);
  if (!f) throw DomainError("conv M(w) is not a face of its Newton polyhedron");
  PolytopeSpec spec{*f, 1, false};
  return brute ? count_interior_bruteforce(nd, spec, false).value : count_interior(nd, spec, false).value;
}

}  // namespace

CYTailReport cy_tail(const WeightVector& w) {
  CYTailReport rep;
  rep.d = w.d;
  Rat s = make_rat(1, w.d);
  for (const auto& x : w.weights) s += x;
  rep.satisfies_2_2d = s == 1;

  auto M = weight_monoid(w);
  if (M.empty()) throw EmptyMonoid("no lattice point of weight 1");
  size_t N = w.weights.size();
  std::vector<QVec> pts;
  for (const auto& m : M) pts.push_back(to_qvec(m));
  pts.push_back(QVec(N, Rat(0)));
  HRep h = hrep_of(pts);
  rep.satisfies_2_2e = h.dim == N && hrep_relint(h, QVec(N, Rat(1)));

  rep.genus_g = genus_via_newton(M, static_cast<int>(N), false);
  rep.pure = rep.genus_g == 0;

  MixedSpectrum sp = qh_spectrum(w);
  rep.mu = sp.total();
  long below_one = 0;
  for (const auto& [k, m] : sp.entries())
    if (k.first > 0 && k.first < 1) below_one += m;
  rep.spectral_check = below_one == 1;
  return rep;
}

long cy_tail_genus_bruteforce(const WeightVector& w) {
  auto M = weight_monoid(w);
  if (M.empty()) throw EmptyMonoid("no lattice point of weight 1");
  return count_relint_bruteforce(M);
}

long modality_check(const WeightVector& w) {
  if (w.n() != 2) throw NotPureTail("modality check applies to surface singularities (n = 2)");
  auto rep = cy_tail(w);
  if (!rep.satisfies_2_2d || !rep.pure) throw NotPureTail("weights do not give a pure CY tail");
  MixedSpectrum sp = qh_spectrum(w);
  Rat a = 1 + make_rat(1, w.d);
  long m = 0;
  for (const auto& [k, c] : sp.entries())
    if (k.first == a) m += c;
  return 1 + m;
}

}  // namespace spectre

namespace spectre {

std::vector<CYRow> cy_rows() {
  auto t1 = [](long y, std::string a, std::string f, std::vector<IVec> m, long d, long mf) {
    return CYRow{1, y, std::move(a), std::move(f), std::move(m), d, mf, 0, 0};
  };
  auto t2 = [](long y, std::string f, std::vector<IVec> m, long d, long mu, long g) {
    return CYRow{2, y, "", std::move(f), std::move(m), d, 0, mu, g};
  };
  return {
      t1(4, "U_12", "x^3+y^3+z^4", {{3, 0, 0}, {0, 3, 0}, {0, 0, 4}}, 12, 1),
      t1(9, "W_12", "x^2+y^4+z^5", {{2, 0, 0}, {0, 4, 0}, {0, 0, 5}}, 20, 1),
      t1(13, "E_14", "x^2+y^3+z^8", {{2, 0, 0}, {0, 3, 0}, {0, 0, 8}}, 24, 1),
      t1(14, "E_12", "x^2+y^3+z^7", {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}}, 42, 1),
      t1(20, "Q_10", "x^2z+y^3+z^4", {{2, 0, 1}, {0, 3, 0}, {0, 0, 4}}, 24, 1),
      t1(22, "Q_12", "x^2z+y^3+z^5", {{2, 0, 1}, {0, 3, 0}, {0, 0, 5}}, 15, 1),
      t1(37, "W_13", "x^2+y^4+yz^4", {{2, 0, 0}, {0, 4, 0}, {0, 1, 4}}, 16, 1),
      t1(38, "Z_11", "x^2+y^3z+z^5", {{2, 0, 0}, {0, 3, 1}, {0, 0, 5}}, 30, 1),
      t1(39, "Z_13", "x^2+y^3z+z^6", {{2, 0, 0}, {0, 3, 1}, {0, 0, 6}}, 18, 1),
      t1(50, "E_13", "x^2+y^3+yz^5", {{2, 0, 0}, {0, 3, 0}, {0, 1, 5}}, 30, 1),
      t1(58, "S_11", "x^2z+xy^2+z^4", {{2, 0, 1}, {1, 2, 0}, {0, 0, 4}}, 16, 1),
      t1(60, "Q_11", "x^2z+y^3+yz^3", {{2, 0, 1}, {0, 3, 0}, {0, 1, 3}}, 18, 1),
      t1(78, "Z_12", "x^2+y^3z+yz^4", {{2, 0, 0}, {0, 3, 1}, {0, 1, 4}}, 22, 1),
      t1(87, "S_12", "x^2z+xy^2+yz^3", {{2, 0, 1}, {1, 2, 0}, {0, 1, 3}}, 13, 1),
      t1(8, "W_15 (W_1,0)", "x^2+y^4+z^6", {{2, 0, 0}, {0, 4, 0}, {0, 0, 6}}, 12, 2),
      t1(12, "E_16 (J_3,0)", "x^2+y^3+z^9", {{2, 0, 0}, {0, 3, 0}, {0, 0, 9}}, 18, 2),
      t1(18, "U_14 (U_1,0)", "x^3+y^3+xz^3-yz^3", {{3, 0, 0}, {0, 3, 0}, {1, 0, 3}, {0, 1, 3}}, 9, 2),
      t1(24, "Q_14 (Q_2,0)", "x^2z+y^3+z^6", {{2, 0, 1}, {0, 3, 0}, {0, 0, 6}}, 12, 2),
      t1(40, "Z_15 (Z_1,0)", "x^2+y^3z+z^7", {{2, 0, 0}, {0, 3, 1}, {0, 0, 7}}, 14, 2),
      t1(63, "S_14 (S_1,0)", "x^2z+xy^2+y^2z^2+z^5", {{2, 0, 1}, {1, 2, 0}, {0, 2, 2}, {0, 0, 5}}, 10, 2),
      t1(6, "N_16 (NA_0,0)", "x^2+y^5+z^5", {{2, 0, 0}, {0, 5, 0}, {0, 0, 5}}, 10, 3),
      t1(19, "V_15 (VA_0,0)", "x^2y+x^2z+y^4+z^4", {{2, 1, 0}, {2, 0, 1}, {0, 4, 0}, {0, 0, 4}}, 8, 3),
      t2(1, "x^4+y^4+z^4", {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}}, 4, 27, 3),
      t2(3, "x^3+y^3+z^6", {{3, 0, 0}, {0, 3, 0}, {0, 0, 6}}, 6, 20, 1),
      t2(5, "x^2+y^6+z^6", {{2, 0, 0}, {0, 6, 0}, {0, 0, 6}}, 6, 25, 2),
      t2(7, "x^2+y^4+z^8", {{2, 0, 0}, {0, 4, 0}, {0, 0, 8}}, 8, 21, 1),
      t2(10, "x^2+y^3+z^12", {{2, 0, 0}, {0, 3, 0}, {0, 0, 12}}, 12, 22, 1),
      t2(25, "x^2z+y^3+z^9", {{2, 0, 1}, {0, 3, 0}, {0, 0, 9}}, 9, 20, 1),
      t2(42, "x^2+y^3z+z^10", {{2, 0, 0}, {0, 3, 1}, {0, 0, 10}}, 10, 21, 1),
      t2(66, "x^2z+xy^2+y^3z+z^7", {{2, 0, 1}, {1, 2, 0}, {0, 3, 1}, {0, 0, 7}}, 7, 20, 1),
  };
}

namespace {

long arnold_mu(const std::string& a) {
  auto u = a.find('_');
  if (u == std::string::npos) throw ParseError("Arnold symbol '" + a + "' has no subscript");
  size_t j = u + 1;
  while (j < a.size() && std::isdigit(static_cast<unsigned char>(a[j]))) ++j;
  if (j == u + 1) throw ParseError("Arnold symbol '" + a + "' has no numeric subscript");
  return std::stol(a.substr(u + 1, j - u - 1));
}

}  // namespace

std::vector<CYRowCheck> check_cy_rows(const std::vector<CYRow>& rows) {
  std::vector<CYRowCheck> out;
  for (const CYRow& row : rows) {
    CYRowCheck c{row.table, row.yonemura, false, {}};
    auto fail = [&](const std::string& m) { c.failures.push_back("Yonemura " + std::to_string(row.yonemura) + ": " + m); };
    try {
      MonomialData md;
      md.nvars = 3;
      md.exponents = row.monomials;
      WeightVector w = weights_from_monomials(md);
      CYTailReport rep = cy_tail(w);
      if (!rep.satisfies_2_2d) fail("1/d + sum w_i != 1");
      if (!rep.satisfies_2_2e) fail("(1,1,1) not interior to Delta_w");
      if (rep.d != row.d) fail("d = " + std::to_string(rep.d) + ", table has " + std::to_string(row.d));
      if (rep.genus_g != cy_tail_genus_bruteforce(w)) fail("genus disagrees with the brute-force count");
      if (row.table == 1) {
        if (!rep.pure) fail("expected a pure tail, g = " + std::to_string(rep.genus_g));
        long mf = modality_check(w);
        if (mf != row.m_f) fail("m_f = " + std::to_string(mf) + ", table has " + std::to_string(row.m_f));
        long mu = arnold_mu(row.arnold);
        if (rep.mu != mu) fail("mu = " + std::to_string(rep.mu) + ", Arnold subscript " + std::to_string(mu));
      } else {
        if (rep.pure) fail("expected a mixed tail");
        if (rep.mu != row.mu) fail("mu = " + std::to_string(rep.mu) + ", table has " + std::to_string(row.mu));
        if (rep.genus_g != row.g) fail("g = " + std::to_string(rep.genus_g) + ", table has " + std::to_string(row.g));
      }
    } catch (const Error& e) {
      fail(e.name() + ": " + e.what());
    }
    c.ok = c.failures.empty();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace spectre
