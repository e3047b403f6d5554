#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace anick {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace anick
