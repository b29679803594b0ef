#pragma once

// Exact rational scalars backed by GMP. mpq_class keeps every value in lowest
// terms with a positive denominator, and zero as 0/1.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace charlier {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

inline Rational pow(const Rational& base, unsigned long e) {
  Rational r(1);
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

/// Generalized binomial p(p-1)...(p-k+1)/k! for rational p.
inline Rational binomial(const Rational& p, long k) {
  if (k < 0) return Rational(0);
  Rational num(1);
  for (long j = 0; j < k; ++j) num *= Rational(p - j);
  return Rational(num / factorial(k));
}

/// Rising factorial (r)_k.
inline Rational rising(const Rational& r, long k) {
  Rational out(1);
  for (long j = 0; j < k; ++j) out *= Rational(r + j);
  return out;
}

inline Rational sign_power(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace charlier
