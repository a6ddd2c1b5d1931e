#pragma once

#include <optional>

#include "valext/closure.hpp"
#include "valext/rational_factor.hpp"

namespace valext {

/// Exact n-th root of an integer, if there is one.
inline std::optional<Integer> integer_root(const Integer& a, unsigned long n) {
  if (n == 0) throw DomainError("zeroth root");
  if (a < 0) {
    if (n % 2 == 0) return std::nullopt;
    auto r = integer_root(-a, n);
    if (!r) return std::nullopt;
    return Integer(-*r);
  }
  Integer r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), n) == 0) return std::nullopt;
  return r;
}

inline bool is_nth_power(const Rational& a, unsigned long n) {
  return integer_root(a.get_num(), n) && integer_root(a.get_den(), n);
}

/// Number of n-th roots of unity in Q.
inline unsigned long roots_of_unity_in_q(unsigned long n) { return n % 2 == 0 ? 2 : 1; }

/// The splitting field of x^n - a over Q is abelian iff a^w is an n-th power.
inline bool kummer_abelian_test(const Rational& a, unsigned long n) {
  if (a == 0 || n == 0) throw DomainError("kummer test needs a != 0 and n >= 1");
  Rational aw = a;
  if (roots_of_unity_in_q(n) == 2) aw = a * a;
  return is_nth_power(aw, n);
}

/// Abelianity of the splitting field of x^n - a from its automorphism group;
/// nullopt when the field has degree above cap.
inline std::optional<bool> splitting_field_is_abelian(const Rational& a, unsigned long n, int cap = 8,
                                                      int* degree = nullptr) {
  std::vector<Rational> c(n + 1, Rational(0));
  c[0] = -a;
  c[n] = 1;
  QPoly f(Rational(0), std::move(c));
  std::vector<QPoly> parts;
  for (const auto& [g, m] : factor_rational(f)) parts.push_back(g);
  try {
    auto cl = build_splitting_closure(parts, cap);
    auto ad = automorphism_data(cl);
    if (degree) *degree = cl.degree();
    return ad.group.is_abelian(ad.group.whole());
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

}  // namespace valext
