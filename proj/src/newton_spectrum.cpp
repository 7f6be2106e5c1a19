#include "spectre/newton_spectrum.hpp"

#include <numeric>
#include <set>

#include "spectre/errors.hpp"
#include "spectre/poly.hpp"

namespace spectre {

long HodgeDeligneTable::at(int p, int q, const Rat& lambda) const {
  auto it = entries.find(HodgeKey{p, q, lambda});
  return it == entries.end() ? 0 : it->second;
}

MixedSpectrum HodgeDeligneTable::to_mixed() const {
  MixedSpectrum s;
  for (const auto& [k, m] : entries) {
    const auto& [p, q, lam] = k;
    s.add(Rat(p) + lam, p + q, m);
  }
  return s;
}

const LatticeCount& LatticeCounter::get(size_t face, long dilate, bool hull) {
  auto key = std::make_tuple(face, dilate, hull);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  LatticeCount c = count_interior(nd_, PolytopeSpec{face, dilate, hull}, true);
  std::lock_guard<std::mutex> lk(mu_);
  return memo_.emplace(key, std::move(c)).first->second;
}

long LatticeCounter::face_count(size_t face, long dilate) {
  if (dilate == 0) return nd_.faces[face].dim % 2 == 0 ? 1 : -1;
  return get(face, dilate, false).value;
}

long LatticeCounter::hull_count(size_t face, long dilate, const Rat& mu) {
  if (dilate == 0) return mu == 0 ? 1 : 0;
  return get(face, dilate, true).at(mu);
}

std::vector<std::pair<PolytopeSpec, LatticeCount>> LatticeCounter::used() const {
  std::lock_guard<std::mutex> lk(mu_);
  std::vector<std::pair<PolytopeSpec, LatticeCount>> out;
  for (const auto& [k, v] : memo_) out.emplace_back(PolytopeSpec{std::get<0>(k), std::get<1>(k), std::get<2>(k)}, v);
  return out;
}

namespace {

long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long sgn(long e) { return (e % 2 == 0) ? 1 : -1; }

size_t stratum_or_throw(const NewtonData& nd, const std::vector<size_t>& I) {
  auto s = nd.stratum(I);
  if (!s) throw DomainError("Gamma_I is empty");
  return *s;
}

// Residues mu (h mod 1) that occur in the dilated cone hulls over the faces of Gamma.
std::set<Rat> residues(LatticeCounter& lc, const std::vector<size_t>& faces, long max_dilate) {
  std::set<Rat> out;
  for (size_t f : faces)
    for (long l = 1; l <= max_dilate; ++l)
      for (const auto& [mu, c] : *lc.get(f, l, true).by_residue)
        if (mu != 0 && c != 0) out.insert(mu);
  return out;
}

void add_to(std::map<HodgeKey, long>& acc, const std::map<HodgeKey, long>& t, long sign) {
  for (const auto& [k, v] : t) acc[k] += sign * v;
}

}  // namespace

std::map<std::pair<int, int>, long> danilov_E(LatticeCounter& lc, const std::vector<size_t>& I) {
  const NewtonData& nd = lc.newton();
  require_convenient(nd);
  require_simple(nd);
  std::map<std::pair<int, int>, long> out;
  size_t s = stratum_or_throw(nd, I);
  int e = nd.n() - static_cast<int>(I.size());
  if (e < 0) return out;
  auto taus = nd.subfaces(s);
  for (int a = 0; a <= e; ++a) {
    for (int b = 0; b <= e; ++b) {
      if (a != b && a != e - b) continue;
      long v = 0;
      for (size_t t : taus) {
        long d = nd.faces[t].dim;
        if (a == b && 2 * a < e) {
          v += sgn(d + b) * binom(d, a);
        } else if (a == b && 2 * a > e) {
          v += sgn(d + b + 1) * binom(d, a + 1);
        } else if (a == b) {
          long inner = sgn(d) * binom(d, a + 1);
          for (long l = 0; a + l + 1 <= d + 1; ++l) inner += sgn(l) * binom(d + 1, a + l + 1) * lc.face_count(t, l);
          v += sgn(b + 1) * inner;
        } else {
          int A = std::max(a, b), B = std::min(a, b);
          for (long l = 0; A + l + 1 <= d + 1; ++l) v += sgn(B + l + 1) * binom(d + 1, A + l + 1) * lc.face_count(t, l);
        }
      }
      if (v != 0) out[{a, b}] = v;
    }
  }
  return out;
}

std::map<std::pair<int, int>, long> danilov_E(const NewtonData& nd, const std::vector<size_t>& I) {
  LatticeCounter lc(nd);
  return danilov_E(lc, I);
}

std::map<HodgeKey, long> danilov_cE(LatticeCounter& lc, const std::vector<size_t>& I) {
  const NewtonData& nd = lc.newton();
  require_convenient(nd);
  require_simple(nd);
  std::map<HodgeKey, long> out;
  size_t s = stratum_or_throw(nd, I);
  auto taus = nd.subfaces(s);
  int dimG = nd.faces[s].dim;
  for (int a = 0; a <= dimG; ++a) {
    long v = 0;
    for (size_t t : taus) {
      long d = nd.faces[t].dim;
      v += sgn(d + a) * binom(d, a);
    }
    if (v != 0) out[HodgeKey{a, a, Rat(0)}] = v;
  }
  int e = nd.n() - static_cast<int>(I.size()) + 1;
  if (e < 0) return out;
  long maxd = dimG + 2;
  for (const Rat& mu : residues(lc, taus, maxd)) {
    Rat lambda = 1 - mu;
    for (int a = 0; a <= e; ++a) {
      int b = e - a;
      long v = 0;
      for (size_t t : taus) {
        long d = nd.faces[t].dim;
        for (long l = 0; a + l + 1 <= d + 1; ++l)
          v += sgn(l + b) * binom(d + 1, a + l + 1) * (lc.hull_count(t, l + 1, mu) - lc.hull_count(t, l, mu));
      }
      if (v != 0) out[HodgeKey{a, b, lambda}] = v;
    }
  }
  return out;
}

std::map<HodgeKey, long> danilov_cE(const NewtonData& nd, const std::vector<size_t>& I) {
  LatticeCounter lc(nd);
  return danilov_cE(lc, I);
}

HodgeDeligneTable vanishing_table(LatticeCounter& lc) {
  const NewtonData& nd = lc.newton();
  require_convenient(nd);
  require_simple(nd);
  int n = nd.n();
  // E^{[l]} and cal-E^{[l]} for |I| = l + 1.
  std::map<int, std::map<HodgeKey, long>> E, cE;
  for (int l = 0; l <= n; ++l) {
    for (const auto& [I, s] : nd.strata(static_cast<size_t>(l + 1))) {
      for (const auto& [ab, v] : danilov_E(lc, I)) E[l][HodgeKey{ab.first, ab.second, Rat(0)}] += v;
      add_to(cE[l], danilov_cE(lc, I), 1);
    }
  }
  std::set<Rat> lambdas{Rat(0)};
  for (const auto& [l, t] : cE)
    for (const auto& [k, v] : t) lambdas.insert(std::get<2>(k));
  auto lookup = [](std::map<int, std::map<HodgeKey, long>>& T, int l, int a, int b, const Rat& lam) -> long {
    auto it = T.find(l);
    if (it == T.end()) return 0;
    auto jt = it->second.find(HodgeKey{a, b, lam});
    return jt == it->second.end() ? 0 : jt->second;
  };
  HodgeDeligneTable tab;
  tab.n = n;
  for (const Rat& lam : lambdas) {
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        long v = 0;
        for (int i = -n; i <= n; ++i) {
          long inner = 0;
          for (int k = std::max(1, -i); p - k >= 0 && q - k >= 0; ++k)
            if (lam == 0) inner += lookup(E, i + 2 * k - 1, p - k, q - k, lam);
          for (int k = std::max(0, -i); p - k >= 0 && q - k >= 0; ++k)
            inner += lookup(cE, i + 2 * k, p - k, q - k, lam);
          v += sgn(n + p + q + i) * inner;
        }
        if (p == 0 && q == 0 && lam == 0) v += sgn(n - 1);
        if (v < 0)
          throw NegativeEntry("negative Hodge-Deligne number h^{" + std::to_string(p) + "," + std::to_string(q) +
                              "}_" + to_string(lam));
        if (v != 0) tab.entries[HodgeKey{p, q, lam}] = v;
      }
    }
  }
  return tab;
}

HodgeDeligneTable vanishing_table(const NewtonData& nd) {
  LatticeCounter lc(nd);
  return vanishing_table(lc);
}

Spectrum brieskorn_poincare(const NewtonData& nd) {
  require_convenient(nd);
  if (!structure_flags(nd).regular_simplicial)
    throw ConditionIIIPrimeViolated("a cone over a face of Gamma is not regular simplicial");
  int n = nd.n();
  struct Term {
    long sign;
    int k;
    std::vector<long> g;  // h(primitive generator) = 1 / g
  };
  std::vector<Term> terms;
  long D = 1;
  for (const auto& fc : nd.faces) {
    Term t{sgn(n - fc.dim), fc.k, {}};
    for (size_t v : fc.vertices) {
      long g = 0;
      for (long x : nd.points[v]) g = std::gcd(g, x);
      t.g.push_back(g);
      D = std::lcm(D, g);
    }
    terms.push_back(std::move(t));
  }
  // Work in x = u^{1/D}; common denominator Q = lcm of all denominators.
  auto one_minus = [](size_t e) { return QPoly::constant(1) - QPoly::monomial(1, e); };
  std::vector<QPoly> dens;
  QPoly Q = QPoly::constant(1);
  for (const auto& t : terms) {
    QPoly den = QPoly::constant(1);
    for (long g : t.g) den = den * one_minus(static_cast<size_t>(D / g));
    Q = divmod(Q * den, gcd(Q, den)).first;
    dens.push_back(std::move(den));
  }
  QPoly num = Rat(sgn(n + 1)) * Q;
  for (size_t i = 0; i < terms.size(); ++i) {
    QPoly cof = divmod(Q, dens[i]).first;
    num += Rat(terms[i].sign) * (pow(one_minus(static_cast<size_t>(D)), static_cast<unsigned>(terms[i].k)) * cof);
  }
  auto [q, r] = divmod(num, Q);
  if (!r.is_zero()) throw NotPolynomial("face sum does not simplify to a polynomial");
  Spectrum s;
  for (size_t e = 0; e < q.coeffs().size(); ++e) {
    const Rat& c = q.coeffs()[e];
    if (c == 0) continue;
    if (!is_integer(c)) throw NotPolynomial("non-integral coefficient in the Poincare polynomial");
    s.add(make_rat(static_cast<long>(e), D), to_long(c.get_num()));
  }
  return s;
}

std::map<std::pair<int, Rat>, long> extremal_strings(LatticeCounter& lc) {
  const NewtonData& nd = lc.newton();
  require_convenient(nd);
  int n = nd.n();
  std::map<std::pair<int, Rat>, long> out;
  for (int j = 0; j <= n; ++j) {
    for (size_t f = 0; f < nd.faces.size(); ++f) {
      const Face& fc = nd.faces[f];
      if (!fc.open_orthant || fc.dim != j) continue;
      for (const auto& [mu, c] : *lc.get(f, 1, true).by_residue)
        if (mu != 0) out[{j, mu}] += c;
    }
  }
  for (int j = 0; j <= n - 1; ++j) {
    long v = 0;
    for (size_t f = 0; f < nd.faces.size(); ++f) {
      const Face& fc = nd.faces[f];
      if (!fc.open_orthant) continue;
      if (fc.dim == j + 1) v += lc.get(f, 1, false).value;
      if (j == 0 && fc.dim == 0) v += 1;
    }
    out[{j, Rat(0)}] = v;
  }
  return out;
}

std::map<std::pair<int, Rat>, long> extremal_strings(const NewtonData& nd) {
  LatticeCounter lc(nd);
  return extremal_strings(lc);
}

}  // namespace spectre

namespace spectre {

MixedSpectrum mixed_from_strings(int n, const Spectrum& s, const std::map<std::pair<int, Rat>, long>& strings) {
  if (n < 0 || n > 2) throw DomainError("weight reconstruction is implemented for n <= 2");
  auto str = [&](int j, const Rat& lam) -> long {
    auto it = strings.find({j, lam});
    return it == strings.end() ? 0 : it->second;
  };
  auto m = [&](const Rat& a) { return s.mult(a); };
  std::set<Rat> lambdas;
  for (const auto& [a, c] : s.entries()) lambdas.insert(frac(a));
  std::map<HodgeKey, long> h;
  auto set = [&](int p, int q, const Rat& lam, long v) {
    if (v < 0) throw InvalidSpectrum("reconstruction produced a negative Hodge number");
    if (v > 0) h[HodgeKey{p, q, lam}] = v;
  };
  auto expect = [](long got, long want, const std::string& what) {
    if (got != want) throw InvalidSpectrum("inconsistent spectrum and strings at " + what);
  };
  for (const Rat& lam : lambdas) {
    Rat cl = lam == 0 ? Rat(0) : 1 - lam;
    if (n == 0) {
      if (lam == 0) throw InvalidSpectrum("integer spectral value for n = 0");
      set(0, 0, lam, m(lam));
    } else if (n == 1) {
      if (lam != 0) {
        long h11 = str(0, lam), h00 = h11, h01 = str(1, lam), h10 = str(1, cl);
        expect(h00 + h01, m(lam), "alpha = " + to_string(lam));
        expect(h10 + h11, m(1 + lam), "alpha = " + to_string(1 + lam));
        set(0, 0, lam, h00);
        set(0, 1, lam, h01);
        set(1, 0, lam, h10);
        set(1, 1, lam, h11);
      } else {
        expect(str(0, lam), m(1), "alpha = 1");
        set(1, 1, lam, m(1));
      }
    } else {
      if (lam != 0) {
        long h22 = str(0, lam), h12 = str(1, lam), h02 = str(2, lam);
        long h00 = h22, h01 = h12, h21 = str(1, cl), h10 = h21, h20 = str(2, cl);
        long h11 = m(1 + lam) - h10 - h12;
        expect(h00 + h01 + h02, m(lam), "alpha = " + to_string(lam));
        expect(h20 + h21 + h22, m(2 + lam), "alpha = " + to_string(2 + lam));
        set(0, 0, lam, h00);
        set(0, 1, lam, h01);
        set(0, 2, lam, h02);
        set(1, 0, lam, h10);
        set(1, 1, lam, h11);
        set(1, 2, lam, h12);
        set(2, 0, lam, h20);
        set(2, 1, lam, h21);
        set(2, 2, lam, h22);
      } else {
        long h22 = str(0, lam), h12 = str(1, lam), h11 = h22, h21 = h12;
        expect(h11 + h12, m(1), "alpha = 1");
        expect(h21 + h22, m(2), "alpha = 2");
        set(1, 1, lam, h11);
        set(1, 2, lam, h12);
        set(2, 1, lam, h21);
        set(2, 2, lam, h22);
      }
    }
  }
  HodgeDeligneTable t;
  t.n = n;
  t.entries = std::move(h);
  MixedSpectrum out = t.to_mixed();
  if (!(project(out) == s)) throw InvalidSpectrum("reconstructed mixed spectrum does not project to the spectrum");
  return out;
}

MixedSpectrum newton_mixed_spectrum_nonsimple(const NewtonData& nd) {
  Spectrum s = brieskorn_poincare(nd);
  return mixed_from_strings(nd.n(), s, extremal_strings(nd));
}

}  // namespace spectre
