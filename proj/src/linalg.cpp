#include "spectre/linalg.hpp"

#include <functional>

namespace spectre {

QVec to_qvec(const IVec& v) {
  QVec r;
  r.reserve(v.size());
  for (long x : v) r.emplace_back(x);
  return r;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<size_t> rref(QMat& m, size_t ncols) {
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < ncols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

size_t rank(QMat m, size_t ncols) { return rref(m, ncols).size(); }

QMat nullspace(QMat m, size_t ncols) {
  auto piv = rref(m, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (size_t c : piv) is_piv[c] = true;
  QMat basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    QVec v(ncols, Rat(0));
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve(const QMat& a, const QVec& b, size_t ncols) {
  QMat aug = a;
  for (size_t i = 0; i < aug.size(); ++i) {
    aug[i].resize(ncols);
    aug[i].push_back(b[i]);
  }
  auto piv = rref(aug, ncols + 1);
  LinearSolution sol;
  if (!piv.empty() && piv.back() == ncols) return sol;
  sol.x.assign(ncols, Rat(0));
  for (size_t i = 0; i < piv.size(); ++i) sol.x[piv[i]] = aug[i][ncols];
  sol.kind = piv.size() == ncols ? LinearSolution::Unique : LinearSolution::Underdetermined;
  return sol;
}

QVec primitive(const QVec& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Int g = 0;
  for (const auto& x : v) {
    Int t = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
  }
  if (g == 0) return v;
  QVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(Int(x.get_num() * (l / x.get_den()) / g));
  return r;
}

static Int det_int(std::vector<std::vector<Int>> m) {
  // Bareiss fraction-free elimination.
  size_t n = m.size();
  Int sign = 1, prev = 1;
  for (size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int gcd_maximal_minors(const std::vector<IVec>& rows) {
  if (rows.empty()) return 1;
  size_t k = rows.size(), n = rows[0].size();
  Int g = 0;
  std::vector<size_t> cols;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (cols.size() == k) {
      std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) m[i][j] = rows[i][cols[j]];
      Int d = det_int(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (size_t c = start; c < n; ++c) {
      cols.push_back(c);
      rec(c + 1);
      cols.pop_back();
    }
  };
  rec(0);
  return g;
}

}  // namespace spectre
