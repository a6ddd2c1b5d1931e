#include "valext/function_factor.hpp"

#include <algorithm>

#include "valext/errors.hpp"
#include "valext/finite_factor.hpp"
#include "valext/hensel.hpp"

namespace valext {

namespace {

using TPoly = std::vector<FpPoly>;  // polynomial in x over F_p[t]

TPoly to_tpoly(const FPoly& f) {
  TPoly r;
  for (const auto& c : f.coeffs()) {
    if (!c.is_polynomial()) throw DomainError("expected polynomial coefficients");
    r.push_back(c.num());
  }
  return r;
}

FPoly from_tpoly(const TPoly& h, std::uint64_t p) {
  std::vector<RatFunc> v;
  for (const auto& c : h) v.emplace_back(c);
  return FPoly(RatFunc(p), std::move(v));
}

void trim(TPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Exact division by a monic polynomial; false when the remainder is nonzero.
bool divide_monic(const TPoly& a, const TPoly& b, TPoly& q) {
  TPoly r = a;
  trim(r);
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(r.size()) - 1;
  if (da < db) return false;
  q.assign(da - db + 1, FpPoly(b[0].prime()));
  for (int i = da; i >= db; --i) {
    FpPoly c = r[i];
    q[i - db] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (!r[i].is_zero()) return false;
  return true;
}

std::vector<FPoly> factor_squarefree(const FPoly& h) {
  const int n = h.degree();
  if (n <= 1) return {h};
  const std::uint64_t p = h.proto().prime();
  TPoly ht = to_tpoly(h);
  int bound = 0;
  for (const auto& c : ht) bound = std::max(bound, c.degree());

  FpPoly best_pi(p);
  Factorization best;
  int good = 0;
  for (int d = 1; d <= GF::kMaxDegree && good < 4; ++d) {
    for (const auto& pi : monic_irreducibles(p, d, 8)) {
      auto k = GFContext::extension(pi);
      std::vector<GF> red;
      for (const auto& c : ht) red.push_back(GF::from_poly(k, c));
      GFPoly hb(GF(k), std::move(red));
      if (!is_separable(hb)) continue;
      Factorization fac = factor_finite(hb, p + d);
      ++good;
      if (best.empty() || fac.size() < best.size()) {
        best = fac;
        best_pi = pi;
      }
      if (best.size() == 1) return {h};
      if (good >= 4) break;
    }
  }
  if (best.empty()) throw DomainError("no good reduction place found");

  const int dpi = best_pi.degree();
  int k = bound / dpi + 1;
  FpPoly pk = FpPoly::constant(p, 1);
  for (int i = 0; i < k; ++i) pk *= best_pi;
  std::vector<GFPoly> residue;
  for (const auto& [g, m] : best) residue.push_back(g);
  PolynomialAdic adic(best_pi);
  auto lifted = hensel_lift(adic, ht, residue, k);

  std::vector<FPoly> out;
  TPoly rest = ht;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::size_t s = 1;
  while (2 * s <= alive.size()) {
    bool found = false;
    std::vector<int> choose(alive.size(), 0);
    std::fill(choose.begin(), choose.begin() + s, 1);
    std::ranges::sort(choose, std::greater<>());
    do {
      TPoly prod{FpPoly::constant(p, 1)};
      for (std::size_t i = 0; i < alive.size(); ++i)
        if (choose[i]) {
          prod = rpoly_mul(prod, lifted[alive[i]], FpPoly(p));
          for (auto& c : prod) c = c % pk;
        }
      TPoly q;
      if (!divide_monic(rest, prod, q)) continue;
      out.push_back(from_tpoly(prod, p));
      rest = q;
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < alive.size(); ++i)
        if (!choose[i]) keep.push_back(alive[i]);
      alive = keep;
      found = true;
      break;
    } while (std::prev_permutation(choose.begin(), choose.end()));
    if (!found) ++s;
  }
  trim(rest);
  if (rest.size() > 1) out.push_back(from_tpoly(rest, p));
  return out;
}

}  // namespace

bool fpoly_less(const FPoly& a, const FPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

std::vector<std::pair<FPoly, int>> squarefree_function_field(const FPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<std::pair<FPoly, int>> out;
  FPoly a = f.monic();
  if (a.degree() <= 0) return out;
  if (a.derivative().is_zero()) throw DomainError("inseparable polynomial");
  FPoly c = gcd(a, a.derivative());
  FPoly w = a / c;
  int i = 1;
  while (w.degree() > 0) {
    FPoly y = gcd(w, c);
    FPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) throw DomainError("inseparable polynomial");
  return out;
}

FPoly integral_rescale(const FPoly& f, FpPoly& scale) {
  const std::uint64_t p = f.proto().prime();
  scale = FpPoly::constant(p, 1);
  for (const auto& c : f.coeffs()) scale = scale * c.den() / gcd(scale, c.den());
  scale = scale.monic();
  const int n = f.degree();
  std::vector<RatFunc> v(n + 1, RatFunc(p));
  RatFunc sp = RatFunc::constant(p, 1);
  for (int i = n; i >= 0; --i) {
    v[i] = f.coeff(i) * sp;
    sp = sp * RatFunc(scale);
  }
  return FPoly(RatFunc(p), std::move(v));
}

std::vector<std::pair<FPoly, int>> factor_function_field(const FPoly& f) {
  std::vector<std::pair<FPoly, int>> out;
  const std::uint64_t p = f.proto().prime();
  for (const auto& [s, m] : squarefree_function_field(f)) {
    FpPoly scale(p);
    FPoly h = integral_rescale(s, scale);
    for (const auto& g : factor_squarefree(h)) {
      const int d = g.degree();
      std::vector<RatFunc> v(d + 1, RatFunc(p));
      RatFunc sp = RatFunc::constant(p, 1);
      for (int i = d; i >= 0; --i) {
        v[i] = g.coeff(i) / sp;
        sp = sp * RatFunc(scale);
      }
      out.emplace_back(FPoly(RatFunc(p), std::move(v)), m);
    }
  }
  std::ranges::sort(out, [](const auto& a, const auto& b) {
    if (fpoly_less(a.first, b.first)) return true;
    if (fpoly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible_function_field(const FPoly& f) {
  if (f.degree() < 1) return false;
  if (f.derivative().is_zero()) throw DomainError("inseparable polynomial");
  auto fac = factor_function_field(f);
  return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace valext
