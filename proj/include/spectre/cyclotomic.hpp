#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectre/poly.hpp"

namespace spectre {

QPoly cyclotomic_polynomial(long k);

// Q(zeta_k); elements are polynomials in zeta of degree < phi(k). k = 1 is Q.
class CyclotomicField {
 public:
  using Elem = QPoly;

  explicit CyclotomicField(long k);
  long conductor() const { return k_; }
  long degree() const { return phi_.degree(); }

  Elem reduce(const QPoly& a) const;
  Elem from_rat(const Rat& a) const { return QPoly::constant(a); }
  Elem zeta_pow(long e) const;
  Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
  Elem inv(const Elem& a) const;  // throws DomainError on zero
  Elem pow(const Elem& a, long e) const;

  // "3/2", "zeta^3", "1-2/3*zeta+zeta^4"
  Elem parse(const std::string& s) const;
  std::string to_string(const Elem& a) const;

 private:
  long k_;
  QPoly phi_;
};

// F_p with a fixed element of exact order k standing in for zeta_k.
struct PrimeImage {
  uint64_t p = 0;
  uint64_t omega = 0;

  // Throws DomainError if a denominator vanishes mod p.
  uint64_t map(const QPoly& a) const;
};

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p);
bool is_prime_u64(uint64_t n);

// Primes p = 1 mod k, p >= start, in increasing order, each with an element of exact order k.
std::vector<PrimeImage> cyclotomic_primes(long k, size_t count, uint64_t start);

size_t rank_mod_p(std::vector<std::vector<uint64_t>> m, uint64_t p);
size_t rank_exact(std::vector<std::vector<QPoly>> m, const CyclotomicField& f);

}  // namespace spectre
