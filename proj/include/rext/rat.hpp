#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rext {

// GMP keeps mpq_class canonical (gcd 1, positive denominator) after every
// arithmetic operation; constructors from integer pairs go through make_rat.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "p/q" or a terminating decimal such as "2.5".
Rat parse_rat(std::string_view text);

/// "p/q" with q omitted when it is 1.
std::string to_string(const Rat& r);

int sign(const Rat& r);

bool is_integer(const Rat& r);

/// Requires is_integer(r) and |r| fitting in a long.
long to_long(const Rat& r);

Rat rat_pow(const Rat& base, unsigned exponent);

Rat factorial(unsigned n);

}  // namespace rext
