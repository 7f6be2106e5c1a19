#include "spectre/hull.hpp"

#include <functional>
#include <set>

#include "spectre/errors.hpp"

namespace spectre {

std::vector<Halfspace> full_dim_facets(const std::vector<QVec>& points, const std::vector<QVec>& rays) {
  if (points.empty()) throw DomainError("hull of an empty point set");
  size_t k = points[0].size();
  std::vector<Halfspace> out;
  if (k == 0) return out;
  std::vector<QVec> gens = points;
  gens.insert(gens.end(), rays.begin(), rays.end());
  size_t np = points.size();
  std::set<std::pair<QVec, Rat>> seen;

  auto consider = [&](const std::vector<size_t>& idx) {
    size_t base = idx[0];  // always a point
    QMat m;
    for (size_t t = 1; t < idx.size(); ++t) {
      QVec row(k);
      for (size_t j = 0; j < k; ++j)
        row[j] = idx[t] < np ? gens[idx[t]][j] - points[base][j] : gens[idx[t]][j];
      m.push_back(std::move(row));
    }
    QMat ns = nullspace(m, k);
    if (ns.size() != 1) return;
    QVec a = primitive(ns[0]);
    Rat b = dot(a, points[base]);
    bool pos = false, neg = false;
    for (size_t i = 0; i < np; ++i) {
      Rat v = dot(a, points[i]) - b;
      if (v > 0) pos = true;
      if (v < 0) neg = true;
    }
    for (const auto& r : rays) {
      Rat v = dot(a, r);
      if (v > 0) pos = true;
      if (v < 0) neg = true;
    }
    if (pos && neg) return;
    if (neg) {
      for (auto& x : a) x = -x;
      b = -b;
    }
    if (seen.emplace(a, b).second) out.push_back({a, b});
  };

  std::vector<size_t> idx;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (idx.size() == k) {
      consider(idx);
      return;
    }
    for (size_t g = start; g < gens.size(); ++g) {
      if (idx.empty() && g >= np) break;
      idx.push_back(g);
      rec(g + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return out;
}

size_t affine_dim(const std::vector<QVec>& points) {
  if (points.empty()) return 0;
  QMat m;
  for (size_t i = 1; i < points.size(); ++i) {
    QVec row(points[0].size());
    for (size_t j = 0; j < row.size(); ++j) row[j] = points[i][j] - points[0][j];
    m.push_back(std::move(row));
  }
  return rank(m, points[0].size());
}

HRep hrep_of(const std::vector<QVec>& points) {
  if (points.empty()) throw DomainError("hull of an empty point set");
  HRep h;
  h.ambient = points[0].size();
  QMat diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    QVec row(h.ambient);
    for (size_t j = 0; j < h.ambient; ++j) row[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(row));
  }
  QMat span = diffs;
  auto piv = rref(span, h.ambient);
  h.dim = piv.size();
  for (auto& c : nullspace(diffs, h.ambient)) {
    h.eq_b.push_back(dot(c, points[0]));
    h.eq_a.push_back(std::move(c));
  }
  if (h.dim == 0) return h;
  // Coordinates on which the projection of the affine hull is injective.
  QMat span_t(h.ambient, QVec(diffs.size()));
  for (size_t i = 0; i < diffs.size(); ++i)
    for (size_t j = 0; j < h.ambient; ++j) span_t[j][i] = diffs[i][j];
  std::vector<size_t> coords;
  {
    QMat acc;
    for (size_t j = 0; j < h.ambient && coords.size() < h.dim; ++j) {
      acc.push_back(span_t[j]);
      if (rank(acc, diffs.size()) > coords.size()) coords.push_back(j);
      else acc.pop_back();
    }
  }
  std::vector<QVec> proj;
  for (const auto& p : points) {
    QVec q;
    for (size_t j : coords) q.push_back(p[j]);
    proj.push_back(std::move(q));
  }
  for (auto& f : full_dim_facets(proj, {})) {
    QVec a(h.ambient, Rat(0));
    for (size_t t = 0; t < coords.size(); ++t) a[coords[t]] = f.a[t];
    h.ineq.push_back({std::move(a), f.b});
  }
  return h;
}

static bool on_hull(const HRep& h, const QVec& x) {
  for (size_t i = 0; i < h.eq_a.size(); ++i)
    if (dot(h.eq_a[i], x) != h.eq_b[i]) return false;
  return true;
}

bool hrep_contains(const HRep& h, const QVec& x) {
  if (!on_hull(h, x)) return false;
  for (const auto& f : h.ineq)
    if (dot(f.a, x) < f.b) return false;
  return true;
}

bool hrep_relint(const HRep& h, const QVec& x) {
  if (!on_hull(h, x)) return false;
  for (const auto& f : h.ineq)
    if (dot(f.a, x) <= f.b) return false;
  return true;
}

}  // namespace spectre
