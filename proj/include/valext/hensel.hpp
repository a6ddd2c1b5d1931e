#pragma once

#include <vector>

#include "valext/errors.hpp"
#include "valext/finite_factor.hpp"
#include "valext/rat_func.hpp"
#include "valext/rational.hpp"

namespace valext {

/// pi-adic structure of Z (pi = p): residues, truncation, unit inverses.
struct IntegerAdic {
  using R = Integer;
  using Field = Rational;
  static constexpr long kInfinite = 1L << 40;
  Integer p;
  GFContextPtr residue;

  explicit IntegerAdic(const Integer& prime)
      : p(prime), residue(GFContext::prime_field(prime.get_ui())) {}
  R zero() const { return 0; }
  R one() const { return 1; }
  R pi() const { return p; }
  R pi_pow(long k) const { return ipow(p, static_cast<unsigned long>(k)); }
  R reduce(const R& a, const R& m) const { return mod_pos(a, m); }
  long order(const R& a) const { return sgn(a) == 0 ? kInfinite : padic_order(a, p); }
  R unit_inverse(const R& u, const R& m) const {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t())) throw DomainError("not a unit");
    return r;
  }
  GF to_residue(const R& a) const { return GF(residue, mod_pos(a, p).get_ui()); }
  R from_residue(const GF& a) const { return Integer(static_cast<unsigned long>(a.coeff(0))); }
  long order(const Rational& a) const {
    return sgn(a) == 0 ? kInfinite : padic_order(a.get_num(), p) - padic_order(a.get_den(), p);
  }
  /// Representative modulo m = p^k of an element of Z_(p).
  R from_field(const Rational& a, const R& m) const {
    if (padic_order(a.get_den(), p) > 0) throw DomainError("not in valuation ring");
    return mod_pos(a.get_num() * unit_inverse(mod_pos(a.get_den(), m), m), m);
  }
  Rational to_field(const R& a) const { return Rational(a); }
  Rational field_pi() const { return Rational(p); }
};

/// pi-adic structure of F_p[t] for an irreducible pi(t).
struct PolynomialAdic {
  using R = FpPoly;
  using Field = RatFunc;
  static constexpr long kInfinite = 1L << 40;
  FpPoly pi_poly;
  GFContextPtr residue;

  explicit PolynomialAdic(const FpPoly& pi)
      : pi_poly(pi.monic()), residue(GFContext::extension(pi)) {}
  R zero() const { return FpPoly(pi_poly.prime()); }
  R one() const { return FpPoly::constant(pi_poly.prime(), 1); }
  R pi() const { return pi_poly; }
  R pi_pow(long k) const {
    R r = one();
    for (long i = 0; i < k; ++i) r *= pi_poly;
    return r;
  }
  R reduce(const R& a, const R& m) const { return a % m; }
  long order(const R& a) const { return a.is_zero() ? kInfinite : order_at(a, pi_poly); }
  R unit_inverse(const R& u, const R& m) const { return inv_mod(u, m); }
  GF to_residue(const R& a) const { return GF::from_poly(residue, a); }
  R from_residue(const GF& a) const { return a.to_poly(); }
  long order(const RatFunc& a) const {
    return a.is_zero() ? kInfinite : order_at(a.num(), pi_poly) - order_at(a.den(), pi_poly);
  }
  R from_field(const RatFunc& a, const R& m) const {
    if (order_at(a.den(), pi_poly) > 0) throw DomainError("not in valuation ring");
    return (a.num() * unit_inverse(a.den() % m, m)) % m;
  }
  RatFunc to_field(const R& a) const { return RatFunc(a); }
  RatFunc field_pi() const { return RatFunc(pi_poly); }
};

template <class R>
using RPoly = std::vector<R>;

template <class R>
RPoly<R> rpoly_mul(const RPoly<R>& a, const RPoly<R>& b, const R& zero) {
  if (a.empty() || b.empty()) return {};
  RPoly<R> r(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// Lift a factorization h = prod g_i (mod pi) of a monic h with pairwise
/// coprime monic residue factors to a factorization modulo pi^k. Returns
/// monic lifts with coefficients reduced modulo pi^k.
template <class Adic>
std::vector<RPoly<typename Adic::R>> hensel_lift(const Adic& adic, const RPoly<typename Adic::R>& h,
                                                 const std::vector<GFPoly>& factors, int k) {
  using R = typename Adic::R;
  const std::size_t r = factors.size();
  const GF zf(adic.residue);
  std::vector<RPoly<R>> lifted(r);
  for (std::size_t i = 0; i < r; ++i)
    for (int c = 0; c <= factors[i].degree(); ++c) lifted[i].push_back(adic.from_residue(factors[i].coeff(c)));
  if (r <= 1 || k <= 1) {
    if (r == 1) {
      R m = adic.one();
      for (int i = 0; i < k; ++i) m = m * adic.pi();
      lifted[0].clear();
      for (const auto& c : h) lifted[0].push_back(adic.reduce(c, m));
    }
    return lifted;
  }
  // Bezout data: s_i = (prod_{l != i} g_l)^{-1} mod g_i.
  std::vector<GFPoly> bez;
  for (std::size_t i = 0; i < r; ++i) {
    GFPoly prod = GFPoly::constant(one_like(zf));
    for (std::size_t l = 0; l < r; ++l)
      if (l != i) prod = (prod * factors[l]) % factors[i];
    bez.push_back(inv_mod(prod, factors[i]));
  }
  R pj = adic.pi();
  for (int j = 1; j < k; ++j) {
    R pj1 = pj * adic.pi();
    RPoly<R> prod{adic.one()};
    for (const auto& g : lifted) {
      prod = rpoly_mul(prod, g, adic.zero());
      for (auto& c : prod) c = adic.reduce(c, pj1);
    }
    std::vector<GF> ec;
    for (std::size_t c = 0; c < h.size(); ++c) {
      R diff = adic.reduce(h[c] - (c < prod.size() ? prod[c] : adic.zero()), pj1);
      ec.push_back(adic.to_residue(diff / pj));
    }
    GFPoly e(zf, std::move(ec));
    if (!e.is_zero()) {
      for (std::size_t i = 0; i < r; ++i) {
        GFPoly corr = (e * bez[i]) % factors[i];
        for (int c = 0; c <= corr.degree(); ++c) lifted[i][c] = adic.reduce(lifted[i][c] + pj * adic.from_residue(corr.coeff(c)), pj1);
      }
    }
    pj = pj1;
  }
  return lifted;
}

}  // namespace valext
