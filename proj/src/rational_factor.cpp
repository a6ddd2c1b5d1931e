#include "valext/rational_factor.hpp"

#include <algorithm>

#include "valext/errors.hpp"
#include "valext/hensel.hpp"

namespace valext {

namespace {

Integer symmetric(const Integer& a, const Integer& m) {
  Integer r = mod_pos(a, m);
  if (2 * r > m) r -= m;
  return r;
}

QPoly from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> v(c.begin(), c.end());
  return QPoly(Rational(0), std::move(v));
}

std::vector<Integer> to_integers(const QPoly& f) {
  std::vector<Integer> r;
  for (const auto& c : f.coeffs()) r.push_back(c.get_num());
  return r;
}

GFPoly reduce_mod(const std::vector<Integer>& h, const GFContextPtr& k) {
  std::vector<GF> c;
  for (const auto& a : h) c.push_back(GF(k, mod_pos(a, k->p).get_ui()));
  return GFPoly(GF(k), std::move(c));
}

// Factor a monic squarefree integer polynomial.
std::vector<QPoly> zassenhaus(const QPoly& h) {
  const int n = h.degree();
  if (n <= 1) return {h};
  std::vector<Integer> hz = to_integers(h);

  Integer best_p = 0;
  Factorization best;
  int good = 0;
  unsigned long p = 1;
  while (good < 6) {
    mpz_class next;
    mpz_nextprime(next.get_mpz_t(), Integer(p).get_mpz_t());
    p = next.get_ui();
    if (p > 100000) break;
    auto k = GFContext::prime_field(p);
    GFPoly hb = reduce_mod(hz, k);
    if (!is_separable(hb)) continue;
    Factorization fac = factor_finite(hb, p);
    ++good;
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = fac;
    }
    if (best.size() == 1) return {h};
  }
  if (best_p == 0) throw DomainError("no good reduction prime found");

  // Landau-Mignotte: every factor coefficient is bounded by 2^n |h|_2.
  Integer norm2 = 0;
  for (const auto& c : hz) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = ipow(Integer(2), n) * (root + 1);
  int k = 1;
  Integer pk = best_p;
  while (pk <= 2 * bound) {
    pk *= best_p;
    ++k;
  }
  std::vector<GFPoly> residue;
  for (const auto& [g, m] : best) residue.push_back(g);
  IntegerAdic adic(best_p);
  auto lifted = hensel_lift(adic, hz, residue, k);

  std::vector<QPoly> out;
  std::vector<Integer> rest = hz;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::size_t s = 1;
  while (2 * s <= alive.size()) {
    bool found = false;
    std::vector<int> choose(alive.size(), 0);
    std::fill(choose.begin(), choose.begin() + s, 1);
    std::ranges::sort(choose, std::greater<>());
    do {
      std::vector<Integer> prod{1};
      for (std::size_t i = 0; i < alive.size(); ++i)
        if (choose[i]) {
          prod = rpoly_mul(prod, lifted[alive[i]], Integer(0));
          for (auto& c : prod) c = mod_pos(c, pk);
        }
      for (auto& c : prod) c = symmetric(c, pk);
      QPoly cand = from_integers(prod);
      QPoly restq = from_integers(rest);
      auto [q, r] = restq.divmod(cand);
      if (!r.is_zero()) continue;
      bool integral = true;
      for (const auto& c : q.coeffs())
        if (c.get_den() != 1) integral = false;
      if (!integral) continue;
      out.push_back(cand);
      rest = to_integers(q);
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < alive.size(); ++i)
        if (!choose[i]) keep.push_back(alive[i]);
      alive = keep;
      found = true;
      break;
    } while (std::prev_permutation(choose.begin(), choose.end()));
    if (!found) ++s;
  }
  if (from_integers(rest).degree() > 0) out.push_back(from_integers(rest));
  return out;
}

}  // namespace

bool qpoly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

std::vector<std::pair<QPoly, int>> squarefree_rational(const QPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<std::pair<QPoly, int>> out;
  QPoly a = f.monic();
  QPoly b = gcd(a, a.derivative());
  QPoly c = a / b;
  QPoly d = a.derivative() / b - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    QPoly g = gcd(c, d);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    c = c / g;
    d = d / g - c.derivative();
    ++i;
  }
  return out;
}

QPoly integral_rescale(const QPoly& f, Integer& scale) {
  scale = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
  const int n = f.degree();
  std::vector<Rational> v(n + 1);
  Integer sp = 1;
  for (int i = n; i >= 0; --i) {
    v[i] = f.coeff(i) * Rational(sp);
    sp *= scale;
  }
  return QPoly(Rational(0), std::move(v));
}

std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f) {
  if (f.is_zero()) throw DomainError("factorization of zero");
  std::vector<std::pair<QPoly, int>> out;
  for (const auto& [s, m] : squarefree_rational(f)) {
    Integer scale;
    QPoly h = integral_rescale(s, scale);
    for (const auto& g : zassenhaus(h)) {
      // undo the rescaling: g(D x) / D^deg g
      const int d = g.degree();
      std::vector<Rational> v(d + 1);
      Integer sp = 1;
      for (int i = d; i >= 0; --i) {
        v[i] = g.coeff(i) / Rational(sp);
        sp *= scale;
      }
      out.emplace_back(QPoly(Rational(0), std::move(v)), m);
    }
  }
  std::ranges::sort(out, [](const auto& a, const auto& b) {
    if (qpoly_less(a.first, b.first)) return true;
    if (qpoly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible_rational(const QPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_rational(f);
  return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace valext
