#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "valext/number_field.hpp"

namespace valext {

/// Squarefree decomposition for monic separable-part input over any perfect
/// or characteristic-zero field; throws DomainError on inseparable parts.
template <class E>
std::vector<std::pair<Poly<E>, int>> squarefree_generic(const Poly<E>& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<std::pair<Poly<E>, int>> out;
  Poly<E> a = f.monic();
  if (a.degree() <= 0) return out;
  if (a.derivative().is_zero()) throw DomainError("inseparable polynomial");
  Poly<E> c = gcd(a, a.derivative());
  Poly<E> w = a / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly<E> y = gcd(w, c);
    Poly<E> fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) throw DomainError("inseparable polynomial");
  return out;
}

template <class E>
bool poly_less(const Poly<E>& a, const Poly<E>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

/// Newton interpolation through (xs[i], ys[i]).
template <class F>
Poly<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys) {
  const F z = zero_like(xs[0]);
  const std::size_t n = xs.size();
  std::vector<F> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  Poly<F> r(z);
  for (std::size_t i = n; i-- > 0;) r = r * Poly<F>::linear(xs[i]) + Poly<F>::constant(dd[i]);
  return r;
}

/// f(y + c) for a polynomial over any field.
template <class E>
Poly<E> taylor_shift(const Poly<E>& f, const E& c) {
  Poly<E> r(f.proto());
  Poly<E> lin(f.proto(), {c, one_like(f.proto())});
  for (int i = f.degree(); i >= 0; --i) r = r * lin + Poly<E>::constant(f.coeff(i));
  return r;
}

/// Norm_{K/F} of a polynomial over K = F(theta), as a polynomial over F.
template <class F>
Poly<F> poly_norm(const Poly<NfElem<F>>& s) {
  const auto& k = s.proto().field();
  const BaseField<F> base = base_of(k->proto());
  const int deg = s.degree() * k->degree();
  std::vector<F> xs, ys;
  for (int j = 0; j <= deg; ++j) {
    F y = j == 0 ? zero_like(k->proto()) : base.scalar(j - 1);
    xs.push_back(y);
    ys.push_back(norm(s.eval(NfElem<F>(k, y))));
  }
  return interpolate(xs, ys);
}

template <class F>
Poly<NfElem<F>> to_field_poly(const Poly<F>& f, const FieldPtr<F>& k) {
  return lift_poly(f, k);
}

/// Factorization of a polynomial over F(theta) into monic irreducibles with
/// multiplicities (Trager's norm method).
template <class F>
std::vector<std::pair<Poly<NfElem<F>>, int>> factor_over(const Poly<NfElem<F>>& g) {
  using E = NfElem<F>;
  const auto& k = g.proto().field();
  const BaseField<F> base = base_of(k->proto());
  std::vector<std::pair<Poly<E>, int>> out;
  for (const auto& [s, mult] : squarefree_generic(g)) {
    std::vector<Poly<E>> parts;
    if (s.degree() == 1) {
      parts.push_back(s);
    } else if (k->degree() == 1) {
      std::vector<F> c;
      for (const auto& a : s.coeffs()) c.push_back(a.scalar());
      for (const auto& [h, m] : base.factor(Poly<F>(k->proto(), std::move(c)))) parts.push_back(lift_poly(h, k));
    } else {
      const E theta = E::generator(k);
      for (std::size_t attempt = 0;; ++attempt) {
        if (attempt > 64) throw ResourceError("no squarefree norm shift found");
        E c = attempt == 0 ? zero_like(theta) : theta.scaled(base.scalar(attempt - 1));
        Poly<E> sc = taylor_shift(s, -c);  // s(y - c)
        Poly<F> nrm = poly_norm(sc);
        if (!is_separable(nrm)) continue;
        for (const auto& [h, m] : base.factor(nrm)) {
          Poly<E> part = gcd(sc, lift_poly(h, k));
          parts.push_back(taylor_shift(part, c).monic());
        }
        break;
      }
    }
    for (auto& p : parts) out.emplace_back(std::move(p), mult);
  }
  std::ranges::sort(out, [](const auto& a, const auto& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

/// Irreducibility over the coefficient field; requires monic input.
template <class F>
bool is_irreducible_over(const Poly<NfElem<F>>& g) {
  if (g.degree() < 1 || !g.is_monic()) throw DomainError("irreducibility test needs a monic polynomial of degree >= 1");
  if (g.derivative().is_zero()) throw DomainError("inseparable polynomial");
  if (g.degree() == 1) return true;
  if (gcd(g, g.derivative()).degree() > 0) return false;
  auto fac = factor_over(g);
  return fac.size() == 1 && fac[0].second == 1;
}

template <class F>
bool is_irreducible_base(const Poly<F>& f) {
  if (f.degree() < 1 || !f.is_monic()) throw DomainError("irreducibility test needs a monic polynomial of degree >= 1");
  return base_of(f.proto()).is_irreducible(f);
}

}  // namespace valext
