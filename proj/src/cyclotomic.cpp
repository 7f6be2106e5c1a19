#include "spectre/cyclotomic.hpp"

#include <cctype>

#include "spectre/errors.hpp"

namespace spectre {

QPoly cyclotomic_polynomial(long k) {
  if (k < 1) throw DomainError("conductor must be positive");
  QPoly num = QPoly::monomial(1, static_cast<size_t>(k)) - QPoly::constant(1);
  for (long d = 1; d < k; ++d)
    if (k % d == 0) num = divmod(num, cyclotomic_polynomial(d)).first;
  return num;
}

CyclotomicField::CyclotomicField(long k) : k_(k), phi_(cyclotomic_polynomial(k)) {}

QPoly CyclotomicField::reduce(const QPoly& a) const { return divmod(a, phi_).second; }

QPoly CyclotomicField::zeta_pow(long e) const {
  long r = ((e % k_) + k_) % k_;
  return reduce(QPoly::monomial(1, static_cast<size_t>(r)));
}

QPoly CyclotomicField::inv(const QPoly& a) const {
  QPoly r0 = phi_, r1 = reduce(a);
  if (r1.is_zero()) throw DomainError("inverse of zero in the cyclotomic field");
  QPoly s0, s1 = QPoly::constant(1);
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw DomainError("non-invertible element in the cyclotomic field");
  return reduce(Rat(1 / r1.lead()) * s1);
}

QPoly CyclotomicField::pow(const QPoly& a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  QPoly r = QPoly::constant(1), b = reduce(a);
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

QPoly CyclotomicField::parse(const std::string& text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty field element");
  QPoly out;
  size_t i = 0;
  while (i < s.size()) {
    Rat sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    }
    size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    i = j;
    if (term.empty()) throw ParseError("bad field element '" + text + "'");
    Rat c = 1;
    long e = 0;
    auto z = term.find("zeta");
    if (z == std::string::npos) {
      c = parse_rat(term);
    } else {
      std::string coef = term.substr(0, z);
      if (!coef.empty()) {
        if (coef.back() != '*') throw ParseError("expected '*' before zeta in '" + text + "'");
        c = parse_rat(coef.substr(0, coef.size() - 1));
      }
      std::string rest = term.substr(z + 4);
      e = 1;
      if (!rest.empty()) {
        if (rest[0] != '^') throw ParseError("expected '^' after zeta in '" + text + "'");
        try {
          size_t used = 0;
          e = std::stol(rest.substr(1), &used);
          if (used != rest.size() - 1 || e < 0) throw ParseError("");
        } catch (...) {
          throw ParseError("bad zeta exponent in '" + text + "'");
        }
      }
      if (k_ == 1 && e != 0) throw ParseError("zeta used with conductor 1");
    }
    out += Rat(sign * c) * zeta_pow(e);
  }
  return out;
}

std::string CyclotomicField::to_string(const QPoly& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    const Rat& c = a.coeffs()[i];
    if (c == 0) continue;
    std::string mag = spectre::to_string(Rat(abs(c)));
    std::string t = i == 0 ? mag : (mag == "1" ? "" : mag + "*") + (i == 1 ? "zeta" : "zeta^" + std::to_string(i));
    if (out.empty()) out = (c < 0 ? "-" : "") + t;
    else out += (c < 0 ? "-" : "+") + t;
  }
  return out;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

uint64_t PrimeImage::map(const QPoly& a) const {
  uint64_t acc = 0, w = 1;
  for (const Rat& c : a.coeffs()) {
    Int num = c.get_num() % Int(static_cast<unsigned long>(p));
    if (num < 0) num += static_cast<unsigned long>(p);
    Int den = c.get_den() % Int(static_cast<unsigned long>(p));
    if (den == 0) throw DomainError("denominator vanishes modulo " + std::to_string(p));
    uint64_t n = num.get_ui(), d = den.get_ui();
    uint64_t term = mulmod(n, powmod(d, p - 2, p), p);
    acc = (acc + mulmod(term, w, p)) % p;
    w = mulmod(w, omega, p);
  }
  return acc;
}

std::vector<PrimeImage> cyclotomic_primes(long k, size_t count, uint64_t start) {
  if (k < 1) throw DomainError("conductor must be positive");
  std::vector<uint64_t> factors;
  for (long x = k, q = 2; x > 1; ++q)
    if (x % q == 0) {
      factors.push_back(static_cast<uint64_t>(q));
      while (x % q == 0) x /= q;
    }
  std::vector<PrimeImage> out;
  uint64_t uk = static_cast<uint64_t>(k);
  uint64_t p = start <= 2 ? 2 : start;
  if (p % uk != 1) p += (uk + 1 - p % uk) % uk;
  for (; out.size() < count; p += uk) {
    if (!is_prime_u64(p) || (k > 1 && p % uk != 1)) continue;
    if (k == 1) {
      out.push_back({p, 1});
      continue;
    }
    for (uint64_t a = 2; a < p; ++a) {
      uint64_t w = powmod(a, (p - 1) / uk, p);
      bool exact = true;
      for (uint64_t q : factors)
        if (powmod(w, uk / q, p) == 1) exact = false;
      if (exact) {
        out.push_back({p, w});
        break;
      }
    }
  }
  return out;
}

size_t rank_mod_p(std::vector<std::vector<uint64_t>> m, uint64_t p) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    uint64_t inv = powmod(m[rank][c], p - 2, p);
    for (size_t j = c; j < cols; ++j) m[rank][j] = mulmod(m[rank][j], inv, p);
    for (size_t i = rank + 1; i < rows; ++i) {
      uint64_t f = m[i][c];
      if (f == 0) continue;
      for (size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + p - mulmod(f, m[rank][j], p)) % p;
    }
    ++rank;
  }
  return rank;
}

size_t rank_exact(std::vector<std::vector<QPoly>> m, const CyclotomicField& f) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    QPoly inv = f.inv(m[rank][c]);
    for (size_t j = c; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], inv);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      QPoly fac = m[i][c];
      for (size_t j = c; j < cols; ++j)
        if (!m[rank][j].is_zero()) m[i][j] -= f.mul(fac, m[rank][j]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace spectre
