#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace spectre {

using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& x);
Int floor_int(const Rat& x);
Rat frac(const Rat& x);          // x - floor(x), in [0,1)
Int lcm_den(const std::vector<Rat>& xs);

// "a/b", "a", "-a/b"; throws ParseError
Rat parse_rat(std::string_view s);
std::string to_string(const Rat& x);

long to_long(const Int& z);      // throws DomainError on overflow

}  // namespace spectre
