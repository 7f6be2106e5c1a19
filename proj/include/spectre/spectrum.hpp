#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spectre/rat.hpp"

namespace spectre {

// Element of Z[Q]: alpha -> multiplicity.
class Spectrum {
 public:
  Spectrum() = default;

  void add(const Rat& alpha, long mult);
  long mult(const Rat& alpha) const;
  const std::map<Rat, long>& entries() const { return m_; }
  bool empty() const { return m_.empty(); }
  long total() const;
  bool nonnegative() const;

  friend bool operator==(const Spectrum& a, const Spectrum& b) { return a.m_ == b.m_; }

 private:
  std::map<Rat, long> m_;
};

// Element of Z[Q x Z]: (alpha, weight) -> multiplicity, sorted by (alpha, weight).
class MixedSpectrum {
 public:
  using Key = std::pair<Rat, int>;

  MixedSpectrum() = default;
  static MixedSpectrum single(const Rat& alpha, int weight, long mult = 1);

  void add(const Rat& alpha, int weight, long mult);
  long mult(const Rat& alpha, int weight) const;
  const std::map<Key, long>& entries() const { return m_; }
  bool empty() const { return m_.empty(); }
  size_t size() const { return m_.size(); }
  long total() const;
  bool nonnegative() const;

  MixedSpectrum& operator+=(const MixedSpectrum& o);
  MixedSpectrum& operator-=(const MixedSpectrum& o);
  friend MixedSpectrum operator+(MixedSpectrum a, const MixedSpectrum& b) { return a += b; }
  friend MixedSpectrum operator-(MixedSpectrum a, const MixedSpectrum& b) { return a -= b; }
  friend MixedSpectrum operator*(long k, const MixedSpectrum& a);
  friend bool operator==(const MixedSpectrum& a, const MixedSpectrum& b) { return a.m_ == b.m_; }

 private:
  std::map<Key, long> m_;
};

Spectrum project(const MixedSpectrum& s);

MixedSpectrum add(const MixedSpectrum& a, const MixedSpectrum& b);

// <c> = 1 if c is an integer, else 0.
int integer_indicator(const Rat& c);
// <a|b> = 1 + <a+b> - <a> - <b>
int bracket(const Rat& a, const Rat& b);

// (a,w)*(b,v) = (a+b, w+v+<a|b>), extended bilinearly.
MixedSpectrum convolve(const MixedSpectrum& a, const MixedSpectrum& b);

// (a,w) -> (n+1-a, 2n-w) for a not integral, (n+1-a, 2n+2-w) otherwise.
MixedSpectrum iota(int n, const MixedSpectrum& s);

Rat spectral_min(const MixedSpectrum& s);
Rat spectral_min(const Spectrum& s);

struct SupportReport {
  bool ok = true;
  std::vector<std::string> violations;
};
SupportReport support_check(int n, const MixedSpectrum& s);

// Steenbrink-normalized pairs (a, w) -> (n - a, w + <a>).
MixedSpectrum from_steenbrink_pairs(int n, const MixedSpectrum& pairs);

std::string to_string(const MixedSpectrum& s);
std::string to_string(const Spectrum& s);

}  // namespace spectre
