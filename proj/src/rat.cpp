#include "spectre/rat.hpp"

#include <cctype>
#include <climits>

#include "spectre/errors.hpp"

namespace spectre {

Rat make_rat(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Int floor_int(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rat frac(const Rat& x) { return x - Rat(floor_int(x)); }

Int lcm_den(const std::vector<Rat>& xs) {
  Int l = 1;
  for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

static bool valid_int_token(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rat parse_rat(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  auto slash = s.find('/');
  std::string_view a = s.substr(0, slash);
  std::string_view b = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_int_token(a) || !valid_int_token(b) || b[0] == '-' || b[0] == '+')
    throw ParseError("bad rational '" + std::string(s) + "'");
  std::string sa(a[0] == '+' ? a.substr(1) : a);
  Int num(sa), den{std::string(b)};
  if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return make_rat(num, den);
}

std::string to_string(const Rat& x) { return x.get_str(); }

long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw DomainError("integer overflow: " + z.get_str());
  return z.get_si();
}

}  // namespace spectre
