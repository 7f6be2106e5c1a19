#include "spectre/poly.hpp"

#include "spectre/errors.hpp"

namespace spectre {

QPoly::QPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

QPoly QPoly::constant(const Rat& a) { return QPoly(std::vector<Rat>{a}); }

QPoly QPoly::monomial(const Rat& a, size_t deg) {
  std::vector<Rat> c(deg + 1, Rat(0));
  c[deg] = a;
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(c));
}

QPoly operator*(const Rat& k, const QPoly& a) {
  std::vector<Rat> c = a.c_;
  for (auto& x : c) x *= k;
  return QPoly(std::move(c));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return Rat(1 / lead()) * *this;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rat> r = a.coeffs();
  long db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rat> q(static_cast<size_t>(a.degree() - db + 1), Rat(0));
  Rat inv = 1 / b.lead();
  for (long i = a.degree(); i >= db; --i) {
    Rat t = r[static_cast<size_t>(i)] * inv;
    if (t == 0) continue;
    q[static_cast<size_t>(i - db)] = t;
    for (long j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= t * b.coeff(static_cast<size_t>(j));
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly pow(const QPoly& a, unsigned e) {
  QPoly r = QPoly::constant(1), base = a;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

void QRatFunc::reduce() {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den = QPoly::constant(1);
    return;
  }
  QPoly g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  Rat l = den.lead();
  num = Rat(1 / l) * num;
  den = Rat(1 / l) * den;
}

QRatFunc operator+(const QRatFunc& a, const QRatFunc& b) {
  QPoly g = gcd(a.den, b.den);
  QPoly ca = divmod(b.den, g).first;  // multiplier for a
  QPoly cb = divmod(a.den, g).first;
  QRatFunc r{a.num * ca + b.num * cb, a.den * ca};
  r.reduce();
  return r;
}

QRatFunc operator*(const QRatFunc& a, const QRatFunc& b) {
  QRatFunc r{a.num * b.num, a.den * b.den};
  r.reduce();
  return r;
}

}  // namespace spectre
