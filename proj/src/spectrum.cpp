#include "spectre/spectrum.hpp"

#include <sstream>

#include "spectre/errors.hpp"

namespace spectre {

void Spectrum::add(const Rat& alpha, long mult) {
  if (mult == 0) return;
  auto it = m_.find(alpha);
  if (it == m_.end()) {
    m_.emplace(alpha, mult);
  } else if ((it->second += mult) == 0) {
    m_.erase(it);
  }
}

long Spectrum::mult(const Rat& alpha) const {
  auto it = m_.find(alpha);
  return it == m_.end() ? 0 : it->second;
}

long Spectrum::total() const {
  long t = 0;
  for (const auto& [a, m] : m_) t += m;
  return t;
}

bool Spectrum::nonnegative() const {
  for (const auto& [a, m] : m_)
    if (m < 0) return false;
  return true;
}

MixedSpectrum MixedSpectrum::single(const Rat& alpha, int weight, long mult) {
  MixedSpectrum s;
  s.add(alpha, weight, mult);
  return s;
}

void MixedSpectrum::add(const Rat& alpha, int weight, long mult) {
  if (mult == 0) return;
  Key k{alpha, weight};
  auto it = m_.find(k);
  if (it == m_.end()) {
    m_.emplace(std::move(k), mult);
  } else if ((it->second += mult) == 0) {
    m_.erase(it);
  }
}

long MixedSpectrum::mult(const Rat& alpha, int weight) const {
  auto it = m_.find(Key{alpha, weight});
  return it == m_.end() ? 0 : it->second;
}

long MixedSpectrum::total() const {
  long t = 0;
  for (const auto& [k, m] : m_) t += m;
  return t;
}

bool MixedSpectrum::nonnegative() const {
  for (const auto& [k, m] : m_)
    if (m < 0) return false;
  return true;
}

MixedSpectrum& MixedSpectrum::operator+=(const MixedSpectrum& o) {
  for (const auto& [k, m] : o.m_) add(k.first, k.second, m);
  return *this;
}

MixedSpectrum& MixedSpectrum::operator-=(const MixedSpectrum& o) {
  for (const auto& [k, m] : o.m_) add(k.first, k.second, -m);
  return *this;
}

MixedSpectrum operator*(long k, const MixedSpectrum& a) {
  MixedSpectrum r;
  if (k == 0) return r;
  for (const auto& [key, m] : a.m_) r.add(key.first, key.second, k * m);
  return r;
}

Spectrum project(const MixedSpectrum& s) {
  Spectrum r;
  for (const auto& [k, m] : s.entries()) r.add(k.first, m);
  return r;
}

MixedSpectrum add(const MixedSpectrum& a, const MixedSpectrum& b) { return a + b; }

int integer_indicator(const Rat& c) { return is_integer(c) ? 1 : 0; }

int bracket(const Rat& a, const Rat& b) {
  return 1 + integer_indicator(a + b) - integer_indicator(a) - integer_indicator(b);
}

MixedSpectrum convolve(const MixedSpectrum& a, const MixedSpectrum& b) {
  MixedSpectrum r;
  for (const auto& [ka, ma] : a.entries())
    for (const auto& [kb, mb] : b.entries())
      r.add(ka.first + kb.first, ka.second + kb.second + bracket(ka.first, kb.first), ma * mb);
  return r;
}

MixedSpectrum iota(int n, const MixedSpectrum& s) {
  MixedSpectrum r;
  for (const auto& [k, m] : s.entries()) {
    int w = is_integer(k.first) ? 2 * n + 2 - k.second : 2 * n - k.second;
    r.add(Rat(n + 1) - k.first, w, m);
  }
  return r;
}

Rat spectral_min(const MixedSpectrum& s) { return spectral_min(project(s)); }

Rat spectral_min(const Spectrum& s) {
  if (s.empty()) throw EmptySpectrum("spectral_min of an empty spectrum");
  for (const auto& [a, m] : s.entries())
    if (m < 0) throw NegativeMultiplicity("negative multiplicity at alpha=" + to_string(a));
  return s.entries().begin()->first;
}

SupportReport support_check(int n, const MixedSpectrum& s) {
  SupportReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };
  for (const auto& [k, m] : s.entries()) {
    const auto& [a, w] = k;
    std::string at = "(" + to_string(a) + "," + std::to_string(w) + ")";
    if (m < 0) fail("negative multiplicity at " + at);
    if (a <= 0 || a >= n + 1) fail("alpha outside (0," + std::to_string(n + 1) + ") at " + at);
    bool integral = is_integer(a);
    long p = to_long(floor_int(a));
    long q = w - p;
    long qlo = integral ? 1 : 0;
    if (q < qlo || q > n) fail("weight out of range at " + at);
  }
  if (!(iota(n, s) == s)) fail("not fixed by the involution iota_" + std::to_string(n));
  return rep;
}

MixedSpectrum from_steenbrink_pairs(int n, const MixedSpectrum& pairs) {
  MixedSpectrum r;
  for (const auto& [k, m] : pairs.entries())
    r.add(Rat(n) - k.first, k.second + integer_indicator(k.first), m);
  return r;
}

std::string to_string(const MixedSpectrum& s) {
  if (s.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, m] : s.entries()) {
    if (!first) os << (m < 0 ? " - " : " + ");
    else if (m < 0) os << "-";
    long am = m < 0 ? -m : m;
    if (am != 1) os << am;
    os << "[(" << to_string(k.first) << "," << k.second << ")]";
    first = false;
  }
  return os.str();
}

std::string to_string(const Spectrum& s) {
  if (s.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, m] : s.entries()) {
    if (!first) os << (m < 0 ? " - " : " + ");
    else if (m < 0) os << "-";
    long am = m < 0 ? -m : m;
    if (am != 1) os << am;
    os << "[" << to_string(a) << "]";
    first = false;
  }
  return os.str();
}

}  // namespace spectre
