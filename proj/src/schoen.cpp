#include "spectre/schoen.hpp"

#include <functional>
#include <thread>

#include "spectre/errors.hpp"
#include "spectre/parallel.hpp"

namespace spectre {

void NodalFamily::validate() const {
  if (m < 1) throw DomainError("m must be positive");
  if (degree < 1) throw DomainError("degree must be positive");
  if (conductor < 1) throw DomainError("conductor must be positive");
  CyclotomicField f(conductor);
  size_t dim = static_cast<size_t>(2 * m + 1);
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].size() != dim)
      throw DomainError("node " + std::to_string(i) + " has " + std::to_string(nodes[i].size()) +
                        " coordinates, expected " + std::to_string(dim));
    bool nonzero = false;
    for (const auto& c : nodes[i]) {
      if (c.degree() >= f.degree()) throw DomainError("node coordinate not reduced modulo the cyclotomic polynomial");
      nonzero = nonzero || !c.is_zero();
    }
    if (!nonzero) throw DomainError("node " + std::to_string(i) + " is the zero vector");
  }
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      bool proportional = true;
      for (size_t a = 0; a < dim && proportional; ++a)
        for (size_t b = a + 1; b < dim && proportional; ++b)
          if (!(f.mul(nodes[i][a], nodes[j][b]) == f.mul(nodes[i][b], nodes[j][a]))) proportional = false;
      if (proportional)
        throw DomainError("nodes " + std::to_string(i) + " and " + std::to_string(j) + " coincide in projective space");
    }
}

std::vector<IVec> monomials_of_degree(int nvars, long deg) {
  std::vector<IVec> out;
  if (nvars < 1 || deg < 0) return out;
  IVec e(static_cast<size_t>(nvars), 0);
  std::function<void(size_t, long)> rec = [&](size_t i, long left) {
    if (i + 1 == e.size()) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (long v = left; v >= 0; --v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, deg);
  return out;
}

namespace {

std::vector<std::vector<uint64_t>> modular_matrix(const NodalFamily& fam, const std::vector<IVec>& mons,
                                                  const PrimeImage& im) {
  std::vector<std::vector<uint64_t>> mat(fam.nodes.size());
  parallel_for(fam.nodes.size(), [&](size_t i, unsigned) {
    std::vector<uint64_t> x;
    for (const auto& c : fam.nodes[i]) x.push_back(im.map(c));
    std::vector<uint64_t> row;
    row.reserve(mons.size());
    for (const auto& e : mons) {
      uint64_t v = 1;
      for (size_t j = 0; j < e.size(); ++j) v = mulmod(v, powmod(x[j], static_cast<uint64_t>(e[j]), im.p), im.p);
      row.push_back(v);
    }
    mat[i] = std::move(row);
  });
  return mat;
}

std::vector<std::vector<QPoly>> exact_matrix(const NodalFamily& fam, const std::vector<IVec>& mons,
                                             const CyclotomicField& f) {
  std::vector<std::vector<QPoly>> mat(fam.nodes.size());
  parallel_for(fam.nodes.size(), [&](size_t i, unsigned) {
    const auto& x = fam.nodes[i];
    long top = 0;
    for (const auto& e : mons)
      for (long v : e) top = std::max(top, v);
    std::vector<std::vector<QPoly>> powers(x.size());
    for (size_t j = 0; j < x.size(); ++j) {
      powers[j].push_back(QPoly::constant(1));
      for (long v = 1; v <= top; ++v) powers[j].push_back(f.mul(powers[j].back(), x[j]));
    }
    std::vector<QPoly> row;
    row.reserve(mons.size());
    for (const auto& e : mons) {
      QPoly v = QPoly::constant(1);
      for (size_t j = 0; j < e.size(); ++j)
        if (e[j]) v = f.mul(v, powers[j][static_cast<size_t>(e[j])]);
      row.push_back(std::move(v));
    }
    mat[i] = std::move(row);
  });
  return mat;
}

}  // namespace

SchoenReport evaluation_rank(const NodalFamily& fam, const RankOptions& opts) {
  if (fam.section_degree() < 0)
    throw DegenerateSection("section degree md-2m-1 = " + std::to_string(fam.section_degree()) + " is negative");
  fam.validate();
  SchoenReport rep;
  auto mons = monomials_of_degree(2 * fam.m + 1, fam.section_degree());
  rep.nodes = static_cast<long>(fam.nodes.size());
  rep.sections = static_cast<long>(mons.size());
  if (fam.nodes.empty()) return rep;

  auto primes = cyclotomic_primes(fam.conductor, 2, opts.prime_start);
  long ranks[2] = {0, 0};
  auto run = [&](int i) { ranks[i] = static_cast<long>(rank_mod_p(modular_matrix(fam, mons, primes[i]), primes[i].p)); };
  std::exception_ptr err;
  std::thread second([&] {
    try {
      run(1);
    } catch (...) {
      err = std::current_exception();
    }
  });
  run(0);
  second.join();
  if (err) std::rethrow_exception(err);
  for (int i = 0; i < 2; ++i) rep.prime_ranks.push_back({primes[i].p, ranks[i]});

  long r = ranks[0];
  if (ranks[0] != ranks[1] || opts.certify) {
    CyclotomicField f(fam.conductor);
    long exact = static_cast<long>(rank_exact(exact_matrix(fam, mons, f), f));
    rep.exact_used = true;
    if (exact < std::max(ranks[0], ranks[1]))
      throw RankDisagreement("exact rank " + std::to_string(exact) + " is below a modular rank");
    r = exact;
  }
  if (r > std::min(rep.nodes, rep.sections)) throw RankDisagreement("rank exceeds the structural bound");
  rep.r = rep.rk_N = rep.dim_W = r;
  rep.phantom = rep.nodes - r;
  return rep;
}

long verified_nodes(const NodalFamily& fam, const MonomialData& F) {
  F.validate();
  size_t dim = static_cast<size_t>(2 * fam.m + 1);
  if (F.nvars != static_cast<int>(dim)) throw DomainError("F must have 2m+1 variables");
  for (const auto& e : F.exponents) {
    long s = 0;
    for (long v : e) s += v;
    if (s != fam.degree) throw DomainError("F is not homogeneous of degree " + std::to_string(fam.degree));
  }
  std::vector<Rat> coef(F.exponents.size(), Rat(1));
  if (F.coefficients) coef = *F.coefficients;
  CyclotomicField f(fam.conductor);
  std::vector<char> ok(fam.nodes.size(), 0);
  parallel_for(fam.nodes.size(), [&](size_t n, unsigned) {
    const auto& x = fam.nodes[n];
    auto eval = [&](const IVec& e) {
      QPoly v = QPoly::constant(1);
      for (size_t j = 0; j < dim; ++j) v = f.mul(v, f.pow(x[j], e[j]));
      return v;
    };
    QPoly val;
    std::vector<QPoly> grad(dim);
    for (size_t t = 0; t < F.exponents.size(); ++t) {
      const IVec& e = F.exponents[t];
      val += coef[t] * eval(e);
      for (size_t j = 0; j < dim; ++j) {
        if (e[j] == 0) continue;
        IVec d = e;
        --d[j];
        grad[j] += Rat(coef[t] * e[j]) * eval(d);
      }
    }
    bool good = val.is_zero();
    for (const auto& g : grad) good = good && g.is_zero();
    ok[n] = good;
  });
  long c = 0;
  for (char v : ok) c += v;
  return c;
}

bool node_verify(const NodalFamily& fam, const MonomialData& F) {
  return !fam.nodes.empty() && verified_nodes(fam, F) == static_cast<long>(fam.nodes.size());
}

MonomialData dwork_quintic() {
  MonomialData F;
  F.nvars = 5;
  std::vector<Rat> c;
  for (size_t i = 0; i < 5; ++i) {
    IVec e(5, 0);
    e[i] = 5;
    F.exponents.push_back(e);
    c.push_back(Rat(1));
  }
  F.exponents.push_back(IVec(5, 1));
  c.push_back(Rat(-5));
  F.coefficients = c;
  return F;
}

NodalFamily dwork_quintic_nodes() {
  NodalFamily fam;
  fam.m = 2;
  fam.degree = 5;
  fam.conductor = 5;
  CyclotomicField f(5);
  for (long a1 = 0; a1 < 5; ++a1)
    for (long a2 = 0; a2 < 5; ++a2)
      for (long a3 = 0; a3 < 5; ++a3) {
        long a4 = ((-(a1 + a2 + a3)) % 5 + 5) % 5;
        fam.nodes.push_back({QPoly::constant(1), f.zeta_pow(a1), f.zeta_pow(a2), f.zeta_pow(a3), f.zeta_pow(a4)});
      }
  return fam;
}

}  // namespace spectre
