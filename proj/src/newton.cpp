#include "spectre/newton.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "spectre/errors.hpp"
#include "spectre/parallel.hpp"

namespace spectre {

void MonomialData::validate() const {
  if (nvars < 1) throw DomainError("nvars must be >= 1");
  if (exponents.empty()) throw DomainError("empty exponent list");
  std::set<IVec> seen;
  for (const auto& e : exponents) {
    if (static_cast<int>(e.size()) != nvars) throw DomainError("exponent vector of wrong length");
    for (long x : e)
      if (x < 0) throw DomainError("negative exponent");
    if (!seen.insert(e).second) throw DomainError("duplicate exponent vector");
  }
  if (coefficients && coefficients->size() != exponents.size())
    throw DomainError("coefficient count does not match exponent count");
}

namespace {

using Mask = std::pair<std::vector<size_t>, std::vector<size_t>>;  // points, rays

std::vector<size_t> intersect(const std::vector<size_t>& a, const std::vector<size_t>& b) {
  std::vector<size_t> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

bool subset(const std::vector<size_t>& a, const std::vector<size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

NewtonData build_newton(const MonomialData& m) {
  m.validate();
  size_t N = static_cast<size_t>(m.nvars);
  for (const auto& e : m.exponents)
    if (std::all_of(e.begin(), e.end(), [](long x) { return x == 0; }))
      throw DomainError("constant term in support: not a singular germ");

  std::vector<QVec> pts, rays;
  for (const auto& e : m.exponents) pts.push_back(to_qvec(e));
  for (size_t j = 0; j < N; ++j) {
    QVec r(N, Rat(0));
    r[j] = 1;
    rays.push_back(r);
  }
  auto hs = full_dim_facets(pts, rays);

  // Keep only support points on compact facets.
  std::vector<bool> on_gamma(pts.size(), false);
  for (const auto& h : hs) {
    bool compact = std::all_of(h.a.begin(), h.a.end(), [](const Rat& x) { return x > 0; });
    if (!compact) continue;
    for (size_t i = 0; i < pts.size(); ++i)
      if (dot(h.a, pts[i]) == h.b) on_gamma[i] = true;
  }
  NewtonData nd;
  nd.nvars = m.nvars;
  std::vector<IVec> gamma_pts;
  for (size_t i = 0; i < pts.size(); ++i)
    if (on_gamma[i]) gamma_pts.push_back(m.exponents[i]);
  std::sort(gamma_pts.begin(), gamma_pts.end());
  nd.points = gamma_pts;

  std::sort(hs.begin(), hs.end(), [](const Halfspace& x, const Halfspace& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  for (const auto& h : hs) {
    NewtonFacet f;
    f.compact = std::all_of(h.a.begin(), h.a.end(), [](const Rat& x) { return x > 0; });
    for (const auto& x : h.a) f.ia.push_back(to_long(x.get_num()));
    f.ib = to_long(h.b.get_num());
    f.a = h.a;
    f.b = h.b;
    if (f.compact) {
      for (auto& x : f.a) x /= h.b;
      f.b = 1;
    }
    for (size_t i = 0; i < nd.points.size(); ++i)
      if (dot(h.a, to_qvec(nd.points[i])) == h.b) f.points.push_back(i);
    for (size_t j = 0; j < N; ++j)
      if (h.a[j] == 0) f.rays.push_back(j);
    if (f.compact) nd.compact.push_back(nd.facets.size());
    nd.facets.push_back(std::move(f));
  }

  nd.convenient = true;
  for (size_t j = 0; j < N; ++j) {
    bool axis = false;
    for (const auto& e : m.exponents) {
      bool pure = e[j] > 0;
      for (size_t t = 0; t < N && pure; ++t)
        if (t != j && e[t] != 0) pure = false;
      axis = axis || pure;
    }
    nd.convenient = nd.convenient && axis;
  }

  // Face lattice closure under intersection.
  std::set<Mask> all;
  std::vector<Mask> queue;
  for (const auto& f : nd.facets) {
    Mask mk{f.points, f.rays};
    if (!mk.first.empty() && all.insert(mk).second) queue.push_back(mk);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& f : nd.facets) {
      Mask mk{intersect(queue[qi].first, f.points), intersect(queue[qi].second, f.rays)};
      if (mk.first.empty()) continue;
      if (all.insert(mk).second) queue.push_back(mk);
    }
  }
  for (const auto& mk : all) {
    if (!mk.second.empty()) continue;
    Face fc;
    fc.points = mk.first;
    std::vector<QVec> q;
    for (size_t i : fc.points) q.push_back(to_qvec(nd.points[i]));
    fc.dim = static_cast<int>(affine_dim(q));
    for (size_t j = 0; j < N; ++j) {
      bool nz = false;
      for (size_t i : fc.points) nz = nz || nd.points[i][j] != 0;
      fc.k += nz ? 1 : 0;
    }
    fc.open_orthant = fc.k == m.nvars;
    for (size_t c = 0; c < nd.compact.size(); ++c)
      if (subset(fc.points, nd.facets[nd.compact[c]].points)) fc.facets.push_back(c);
    for (size_t j = 0; j < nd.facets.size(); ++j)
      if (subset(fc.points, nd.facets[j].points)) fc.all_facets.push_back(j);
    nd.faces.push_back(std::move(fc));
  }
  std::sort(nd.faces.begin(), nd.faces.end(),
            [](const Face& x, const Face& y) { return std::tie(x.dim, x.points) < std::tie(y.dim, y.points); });
  for (auto& fc : nd.faces) {
    for (const auto& g : nd.faces)
      if (g.dim == 0 && subset(g.points, fc.points)) fc.vertices.push_back(g.points[0]);
    auto s = nd.stratum(fc.facets);
    fc.c = s ? nd.faces[*s].dim - fc.dim : 0;
  }
  return nd;
}

std::optional<size_t> NewtonData::find_face(const std::vector<size_t>& pts) const {
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i].points == pts) return i;
  return std::nullopt;
}

std::optional<size_t> NewtonData::stratum(const std::vector<size_t>& I) const {
  if (I.empty()) return std::nullopt;
  std::vector<size_t> pts = facets[compact[I[0]]].points;
  for (size_t t = 1; t < I.size(); ++t) pts = intersect(pts, facets[compact[I[t]]].points);
  if (pts.empty()) return std::nullopt;
  return find_face(pts);
}

std::vector<std::pair<std::vector<size_t>, size_t>> NewtonData::strata(size_t size) const {
  std::vector<std::pair<std::vector<size_t>, size_t>> out;
  std::vector<size_t> I;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (I.size() == size) {
      if (auto s = stratum(I)) out.emplace_back(I, *s);
      return;
    }
    for (size_t c = start; c < compact.size(); ++c) {
      I.push_back(c);
      rec(c + 1);
      I.pop_back();
    }
  };
  if (size >= 1) rec(0);
  return out;
}

std::vector<size_t> NewtonData::subfaces(size_t f) const {
  std::vector<size_t> out;
  for (size_t g = 0; g < faces.size(); ++g)
    if (subset(faces[g].points, faces[f].points)) out.push_back(g);
  return out;
}

void require_convenient(const NewtonData& nd) {
  if (!nd.convenient) throw NotConvenient("Newton polytope does not meet every coordinate axis");
}

void require_simple(const NewtonData& nd) {
  if (!structure_flags(nd).simple) throw ConditionIIIViolated("a vertex cone of the Newton polytope is not simplicial");
}

Rat h_value(const NewtonData& nd, const QVec& x) {
  require_convenient(nd);
  for (const auto& v : x)
    if (v < 0) throw DomainError("h is defined on the nonnegative orthant");
  Rat best = dot(nd.normal(0), x);
  for (size_t i = 1; i < nd.compact.size(); ++i) best = std::min(best, dot(nd.normal(i), x));
  return best;
}

Rat h_value(const NewtonData& nd, const IVec& x) { return h_value(nd, to_qvec(x)); }

long LatticeCount::at(const Rat& lambda) const {
  if (!by_residue) throw DomainError("lattice count has no residue data");
  auto it = by_residue->find(lambda);
  return it == by_residue->end() ? 0 : it->second;
}

namespace {

using i128 = __int128;

i128 idot(const IVec& a, const IVec& x) {
  i128 s = 0;
  for (size_t j = 0; j < a.size(); ++j) s += static_cast<i128>(a[j]) * x[j];
  return s;
}

void check_spec(const NewtonData& nd, const PolytopeSpec& spec) {
  if (spec.face >= nd.faces.size()) throw DegenerateFace("face index out of range (empty face)");
  if (spec.dilate < 1) throw DomainError("dilation factor must be >= 1");
  if (nd.faces[spec.face].facets.empty()) throw DegenerateFace("face lies on no compact facet");
}

LatticeCount finish(std::map<long, long>& buckets, long den, bool with_residues) {
  LatticeCount lc;
  for (const auto& [r, c] : buckets) lc.value += c;
  if (with_residues) {
    std::map<Rat, long> by;
    for (const auto& [r, c] : buckets)
      if (c != 0) by[make_rat(r, den)] += c;
    lc.by_residue = std::move(by);
  }
  return lc;
}

}  // namespace

namespace {

LatticeCount count_interior_impl(const NewtonData& nd, const PolytopeSpec& spec, bool with_residues) {
  check_spec(nd, spec);
  const Face& f = nd.faces[spec.face];
  const NewtonFacet& base = nd.facets[nd.compact[f.facets[0]]];
  const IVec& la = base.ia;
  const long lb = base.ib;
  const long L = spec.dilate;
  size_t N = static_cast<size_t>(nd.nvars);

  std::vector<size_t> coords;
  IVec ub(N, 0);
  for (size_t j = 0; j < N; ++j) {
    long mx = 0;
    for (size_t i : f.points) mx = std::max(mx, nd.points[i][j]);
    if (mx > 0) {
      coords.push_back(j);
      ub[j] = mx * L;
    }
  }
  std::vector<bool> tight(nd.facets.size(), false);
  for (size_t j : f.all_facets) tight[j] = true;

  // x in relint(s * tau) with s = num / den (den = lb for the hull case).
  auto accept = [&](const IVec& x, i128 s_num, i128 s_den) {
    for (size_t j = 0; j < nd.facets.size(); ++j) {
      const auto& F = nd.facets[j];
      i128 v = idot(F.ia, x) * s_den - s_num * F.ib;
      if (v < 0) return false;
      if ((v == 0) != tight[j]) return false;
    }
    return true;
  };

  // Hyperplane bound: la . x <= L * lb (face) or < L * lb (hull).
  const i128 cap = static_cast<i128>(L) * lb;
  size_t nc = coords.size();
  std::vector<std::map<long, long>> slots;
  auto run = [&](long first, std::map<long, long>& out) {
    IVec x(N, 0);
    x[coords[0]] = first;
    std::function<void(size_t, i128)> rec = [&](size_t t, i128 partial) {
      if (t == nc) {
        if (spec.hull) {
          if (partial <= 0 || partial >= cap) return;
          if (!accept(x, partial, lb)) return;
          out[static_cast<long>(partial % lb)] += 1;
        } else {
          if (partial != cap) return;
          if (!accept(x, L, 1)) return;
          out[0] += 1;
        }
        return;
      }
      size_t j = coords[t];
      if (!spec.hull && t == nc - 1) {
        i128 rem = cap - partial;
        if (rem < 0 || rem % la[j] != 0) return;
        i128 v = rem / la[j];
        if (v > ub[j]) return;
        x[j] = static_cast<long>(v);
        rec(t + 1, cap);
        x[j] = 0;
        return;
      }
      for (long v = 0; v <= ub[j]; ++v) {
        i128 p = partial + static_cast<i128>(la[j]) * v;
        if (p > cap || (spec.hull && p >= cap)) break;
        x[j] = v;
        rec(t + 1, p);
      }
      x[j] = 0;
    };
    i128 p0 = static_cast<i128>(la[coords[0]]) * first;
    if (p0 > cap) return;
    if (nc == 1 && !spec.hull) {
      if (p0 != cap) return;
      if (accept(x, L, 1)) out[0] += 1;
      return;
    }
    rec(1, p0);
  };

  long n_first = ub[coords[0]] + 1;
  slots.resize(static_cast<size_t>(n_first));
  parallel_for(static_cast<size_t>(n_first), [&](size_t i, unsigned) { run(static_cast<long>(i), slots[i]); });
  std::map<long, long> buckets;
  for (auto& s : slots)
    for (const auto& [r, c] : s) buckets[r] += c;
  return finish(buckets, spec.hull ? lb : 1, with_residues);
}

}  // namespace

namespace {

std::mutex audit_mu;
CountAudit* active_audit = nullptr;

}  // namespace

CountAudit::CountAudit() {
  std::lock_guard<std::mutex> g(audit_mu);
  if (active_audit) throw DomainError("a count audit is already active");
  active_audit = this;
}

CountAudit::~CountAudit() {
  std::lock_guard<std::mutex> g(audit_mu);
  active_audit = nullptr;
}

void CountAudit::record(const NewtonData& nd, const PolytopeSpec& spec, const LatticeCount& c) {
  auto same = [&](const NewtonData& o) { return o.nvars == nd.nvars && o.points == nd.points && o.faces.size() == nd.faces.size(); };
  if (entries_.empty() || !same(*entries_.back().newton)) {
    auto it = std::find_if(entries_.rbegin(), entries_.rend(), [&](const Entry& e) { return same(*e.newton); });
    entries_.push_back({it == entries_.rend() ? std::make_shared<const NewtonData>(nd) : it->newton, spec, c});
  } else {
    entries_.push_back({entries_.back().newton, spec, c});
  }
}

std::vector<CountAudit::Entry> CountAudit::entries() const {
  std::lock_guard<std::mutex> g(audit_mu);
  return entries_;
}

LatticeCount count_interior(const NewtonData& nd, const PolytopeSpec& spec, bool with_residues) {
  LatticeCount c = count_interior_impl(nd, spec, with_residues);
  std::lock_guard<std::mutex> g(audit_mu);
  if (active_audit) active_audit->record(nd, spec, c);
  return c;
}

namespace {

template <class Visit>
void scan_box(const IVec& lo, const IVec& hi, Visit&& visit) {
  size_t N = lo.size();
  IVec x = lo;
  while (true) {
    visit(x);
    size_t j = 0;
    while (j < N && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == N) return;
    ++x[j];
  }
}

void box_of(const std::vector<IVec>& pts, IVec& lo, IVec& hi) {
  lo = hi = pts[0];
  for (const auto& p : pts)
    for (size_t j = 0; j < p.size(); ++j) {
      lo[j] = std::min(lo[j], p[j]);
      hi[j] = std::max(hi[j], p[j]);
    }
}

}  // namespace

LatticeCount count_interior_bruteforce(const NewtonData& nd, const PolytopeSpec& spec, bool with_residues) {
  check_spec(nd, spec);
  const Face& f = nd.faces[spec.face];
  std::vector<IVec> verts;
  for (size_t i : f.vertices) {
    IVec v = nd.points[i];
    for (auto& x : v) x *= spec.dilate;
    verts.push_back(v);
  }
  if (spec.hull) verts.push_back(IVec(static_cast<size_t>(nd.nvars), 0));
  std::vector<QVec> qv;
  for (const auto& v : verts) qv.push_back(to_qvec(v));
  HRep h = hrep_of(qv);
  IVec lo, hi;
  box_of(verts, lo, hi);
  std::map<Rat, long> by;
  long total = 0;
  scan_box(lo, hi, [&](const IVec& x) {
    QVec q = to_qvec(x);
    if (!hrep_relint(h, q)) return;
    ++total;
    if (with_residues) {
      Rat hv = dot(nd.normal(0), q);
      for (size_t i = 1; i < nd.compact.size(); ++i) hv = std::min(hv, dot(nd.normal(i), q));
      by[frac(hv)] += 1;
    }
  });
  LatticeCount lc;
  lc.value = total;
  if (with_residues) lc.by_residue = std::move(by);
  return lc;
}

long count_relint_bruteforce(const std::vector<IVec>& points) {
  if (points.empty()) throw DegenerateFace("empty polytope");
  std::vector<QVec> qv;
  for (const auto& v : points) qv.push_back(to_qvec(v));
  HRep h = hrep_of(qv);
  IVec lo, hi;
  box_of(points, lo, hi);
  long total = 0;
  scan_box(lo, hi, [&](const IVec& x) {
    if (hrep_relint(h, to_qvec(x))) ++total;
  });
  return total;
}

StructureFlags structure_flags(const NewtonData& nd) {
  require_convenient(nd);
  StructureFlags fl;
  fl.simple = true;
  fl.regular_simplicial = true;
  for (const auto& fc : nd.faces) {
    if (fc.dim == 0 && fc.all_facets.size() != static_cast<size_t>(nd.nvars)) fl.simple = false;
    if (fc.vertices.size() != static_cast<size_t>(fc.dim) + 1) {
      fl.regular_simplicial = false;
      continue;
    }
    std::vector<IVec> rows;
    for (size_t v : fc.vertices) {
      IVec p = nd.points[v];
      long g = 0;
      for (long x : p) g = std::gcd(g, x);
      for (auto& x : p) x /= g;
      rows.push_back(p);
    }
    if (gcd_maximal_minors(rows) != 1) fl.regular_simplicial = false;
  }
  return fl;
}

}  // namespace spectre
