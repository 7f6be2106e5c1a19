#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spectre/rat.hpp"

namespace spectre {

// Dense univariate polynomial over Q; c[i] is the coefficient of x^i.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> c);
  static QPoly constant(const Rat& a);
  static QPoly monomial(const Rat& a, size_t deg);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rat& k, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  QPoly monic() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);  // monic, or zero
QPoly pow(const QPoly& a, unsigned e);

// num / den in lowest terms with monic denominator.
struct QRatFunc {
  QPoly num;
  QPoly den = QPoly::constant(1);

  void reduce();
  friend QRatFunc operator+(const QRatFunc& a, const QRatFunc& b);
  friend QRatFunc operator*(const QRatFunc& a, const QRatFunc& b);
};

}  // namespace spectre
