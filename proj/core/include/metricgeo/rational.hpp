#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>

#include "metricgeo/errors.hpp"

namespace metricgeo {

// Exact rational arithmetic. mpq_class keeps results of arithmetic in
// canonical form (lowest terms, positive denominator); values built from raw
// numerator/denominator pairs must go through make_rational.
using Rational = mpq_class;

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(mpz_class(num), mpz_class(den));
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
  try {
    return make_rational(mpz_class(num, 10), mpz_class(den, 10));
  } catch (const std::invalid_argument&) {
    throw InvalidInput("malformed integer in rational: " + num + "/" + den);
  }
}

// Every finite double has an exact rational value.
inline Rational rational_from_double(double x) { return Rational(x); }

inline double to_double(const Rational& r) { return r.get_d(); }

// 2^k for any integer k.
inline Rational pow2(long k) {
  mpz_class p(1);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(std::labs(k)));
  return k >= 0 ? Rational(p) : make_rational(mpz_class(1), p);
}

// 3^k for any integer k.
inline Rational pow3(long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(std::labs(k)));
  return k >= 0 ? Rational(p) : make_rational(mpz_class(1), p);
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace metricgeo
