#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace valext {

using Integer = mpz_class;
using Rational = mpq_class;

// Uniform scalar interface shared by every coefficient field in the library.
// Generic code calls these unqualified; field types living in namespace
// valext are found by ADL, the GMP types by the overloads below.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational int_like(const Rational&, long n) { return Rational(n); }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }
inline Rational inv(const Rational& a) { return Rational(1) / a; }
inline std::uint64_t characteristic(const Rational&) { return 0; }
inline std::string to_string(const Rational& a) { return a.get_str(); }

/// num/den in lowest terms (mpq_class does not canonicalize on construction).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Exponent of the prime p in n (n != 0).
inline long padic_order(const Integer& n, const Integer& p) {
  if (sgn(n) == 0) return 0;
  Integer m = abs(n);
  long k = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

inline Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

/// Non-negative residue of n modulo m.
inline Integer mod_pos(const Integer& n, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Exact n-th root of a non-negative integer, if it exists.
inline bool exact_root(const Integer& a, unsigned long n, Integer& out) {
  if (sgn(a) < 0) return false;
  return mpz_root(out.get_mpz_t(), a.get_mpz_t(), n) != 0;
}

inline bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

}  // namespace valext
