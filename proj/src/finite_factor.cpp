#include "valext/finite_factor.hpp"

#include <algorithm>

namespace valext {

bool gfpoly_less(const GFPoly& a, const GFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

namespace {

// p-th root of a polynomial whose derivative vanishes: coefficients only in
// degrees divisible by p, each coefficient replaced by its p-th root a^(q/p).
GFPoly pth_root(const GFPoly& f) {
  const GF& z = f.proto();
  std::uint64_t p = z.prime();
  Integer e = z.context()->order / p;
  std::vector<GF> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i).pow(e));
  return GFPoly(z, std::move(c));
}

}  // namespace

Factorization squarefree_decomposition(const GFPoly& f0) {
  if (f0.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  GFPoly f = f0.monic();
  Factorization out;
  if (f.degree() <= 0) return out;
  std::uint64_t p = f.proto().prime();
  // Yun-style loop with the characteristic-p correction.
  GFPoly d = f.derivative();
  if (d.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(f))) out.emplace_back(g, m * static_cast<int>(p));
    return out;
  }
  GFPoly c = gcd(f, d);
  GFPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    GFPoly y = gcd(w, c);
    GFPoly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(c.monic())))
      out.emplace_back(g, m * static_cast<int>(p));
  }
  return out;
}

std::vector<std::pair<GFPoly, int>> distinct_degree(const GFPoly& f0) {
  std::vector<std::pair<GFPoly, int>> out;
  GFPoly f = f0.monic();
  const GF& z = f.proto();
  Integer q = z.context()->order;
  GFPoly x = GFPoly::x(z);
  GFPoly h = x % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = pow_mod(h, q, f);
    GFPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

std::vector<GFPoly> equal_degree(const GFPoly& f0, int d, std::mt19937_64& rng) {
  GFPoly f = f0.monic();
  if (f.degree() == d) return {f};
  const GF& z = f.proto();
  const auto& ctx = z.context();
  Integer q = ctx->order;
  std::uint64_t p = ctx->p;
  int n = f.degree();
  for (;;) {
    // random polynomial of degree < n
    std::vector<GF> c;
    for (int i = 0; i < n; ++i) c.push_back(GF::random(ctx, rng));
    GFPoly a(z, std::move(c));
    if (a.degree() <= 0) continue;
    GFPoly b(z);
    if (p == 2) {
      // trace map: a + a^2 + ... + a^(2^(k d - 1)) with q = 2^k
      int k = ctx->degree;
      GFPoly t = a % f, s = t;
      for (int i = 1; i < k * d; ++i) {
        t = (t * t) % f;
        s = s + t;
      }
      b = s;
    } else {
      Integer e = (ipow(q, d) - 1) / 2;
      b = pow_mod(a, e, f) - GFPoly::constant(one_like(z));
    }
    GFPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < n) {
      auto left = equal_degree(g, d, rng);
      auto right = equal_degree(f / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

Factorization factor_finite(const GFPoly& f, std::mt19937_64& rng) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  Factorization out;
  for (auto& [s, m] : squarefree_decomposition(f)) {
    for (auto& [g, d] : distinct_degree(s)) {
      for (auto& h : equal_degree(g, d, rng)) out.emplace_back(h.monic(), m);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return gfpoly_less(a.first, b.first); });
  Factorization merged;
  for (auto& fm : out) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(fm);
  }
  return merged;
}

Factorization factor_finite(const GFPoly& f, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  return factor_finite(f, rng);
}

bool is_irreducible_finite(const GFPoly& f) {
  if (f.degree() <= 0) return false;
  GFPoly g = f.monic();
  if (gcd(g, g.derivative()).degree() > 0) return false;
  auto dd = distinct_degree(g);
  return dd.size() == 1 && dd[0].second == g.degree();
}

}  // namespace valext
