#pragma once

#include <string>
#include <utility>
#include <vector>

#include "valext/nf_factor.hpp"

namespace valext {

inline constexpr int kDefaultDegreeCap = 24;

/// Power coordinates of an element of T[y]/(g) over F: index i*N + j holds
/// coordinate j of the coefficient of y^i.
template <class F>
Vec<F> algebra_coords(const Poly<NfElem<F>>& a, int d, int big_n, const F& proto) {
  Vec<F> v(static_cast<std::size_t>(d) * big_n, zero_like(proto));
  for (int i = 0; i <= a.degree() && i < d; ++i) {
    auto c = a.coeff(i).coords();
    for (int j = 0; j < big_n; ++j) v[i * big_n + j] = c[j];
  }
  return v;
}

/// Primitive element of T(y) with g(y) = 0: theta' = theta + c y, c run through
/// the base scalars 1, 2, ... until the minimal polynomial has full degree.
/// Returns the new field and the images of theta and y.
template <class F>
struct FlattenResult {
  FieldPtr<F> field;
  NfElem<F> theta_image;
  NfElem<F> y_image;
  F multiplier;
};

template <class F>
FlattenResult<F> flatten_step(const Poly<NfElem<F>>& g, int cap = kDefaultDegreeCap, std::size_t first_multiplier = 0) {
  using E = NfElem<F>;
  const auto& t = g.proto().field();
  const F proto = t->proto();
  const BaseField<F> base = base_of(proto);
  const int big_n = t->degree(), d = g.degree(), total = big_n * d;
  if (total > cap) throw ResourceError("tower degree " + std::to_string(total) + " exceeds cap " + std::to_string(cap));
  const Poly<E> gm = g.monic();
  const E theta = E::generator(t);
  for (std::size_t k = first_multiplier; k < first_multiplier + 256; ++k) {
    F c = base.scalar(k);
    Poly<E> th(E(t), {theta, E(t, c)});  // theta + c*y
    std::vector<Vec<F>> pw;
    Poly<E> cur = Poly<E>::constant(one_like(theta));
    for (int i = 0; i <= total; ++i) {
      pw.push_back(algebra_coords(cur, d, big_n, proto));
      cur = (cur * th) % gm;
    }
    Poly<F> m = minimal_relation(pw, proto);
    if (m.degree() < total) continue;
    pw.pop_back();
    auto field = make_field(m, t->var);
    auto express = [&](const Poly<E>& a) {
      auto sol = solve_left(pw, algebra_coords(a % gm, d, big_n, proto));
      if (!sol) throw DomainError("flattening: element outside the primitive span");
      return E::from_coords(field, *sol);
    };
    E ti = express(Poly<E>::constant(theta));
    E yi = express(Poly<E>::x(theta));
    return {field, ti, yi, c};
  }
  throw ResourceError("no primitive element found");
}

/// A tower F = K_0 ⊂ K_1 ⊂ ... ⊂ K_s, each K_k = K_{k-1}[y]/(g_k), with every
/// level kept in flattened form F[X]/(m_k).
template <class F>
class FieldTower {
 public:
  using E = NfElem<F>;

  explicit FieldTower(const F& proto, int cap = kDefaultDegreeCap) : cap_(cap) {
    levels_.push_back(trivial_field(proto));
  }

  int steps() const { return static_cast<int>(steps_.size()); }
  int degree() const { return top()->degree(); }
  const FieldPtr<F>& top() const { return levels_.back(); }
  const FieldPtr<F>& level(int k) const { return levels_[k]; }
  const Poly<E>& step(int k) const { return steps_[k]; }
  const std::vector<F>& multipliers() const { return mult_; }
  /// Image in the top field of the k-th adjoined generator.
  E generator(int k) const { return embed(k + 1, gen_local_[k]); }
  F base_proto() const { return levels_[0]->proto(); }

  /// Adjoin a root of g, a polynomial over the current top level.
  void add_step(const Poly<E>& g) {
    if (g.proto().field() != top()) throw DomainError("step polynomial must have coefficients in the top field");
    if (!g.is_monic()) throw DomainError("step polynomial must be monic");
    if (gcd(g, g.derivative()).degree() > 0 || g.derivative().is_zero()) throw DomainError("step polynomial is not separable");
    if (!is_irreducible_over(g)) throw DomainError("step polynomial is reducible over the field below");
    auto fr = flatten_step(g, cap_);
    steps_.push_back(g);
    levels_.push_back(fr.field);
    theta_images_.push_back(fr.theta_image);
    gen_local_.push_back(fr.y_image);
    mult_.push_back(fr.multiplier);
  }
  void add_step(const Poly<F>& g) { add_step(lift_poly(g, top())); }

  /// Map an element of level k into level k2 >= k.
  E embed(int k, const E& a, int k2 = -1) const {
    if (k2 < 0) k2 = static_cast<int>(levels_.size()) - 1;
    E r = a;
    for (int j = k; j < k2; ++j) r = substitute(r, theta_images_[j]);
    return r;
  }
  E from_base(const F& c) const { return E(top(), c); }

  /// Primitive element of the top level over F and its minimal polynomial.
  std::pair<E, Poly<F>> primitive_element() const {
    E th = E::generator(top());
    Poly<F> m = minimal_polynomial(th);
    if (m.degree() != degree()) throw DomainError("primitive element has deficient degree");
    return {th, m};
  }

  /// Coordinates of a top-level element over level k-1 with respect to
  /// 1, a_k, ..., a_k^{d-1}, for k = steps() (the top step).
  std::vector<E> tower_coords(const E& a) const {
    const int s = steps();
    if (s == 0) return {a};
    const auto& below = levels_[s - 1];
    const int nb = below->degree(), d = steps_[s - 1].degree();
    const E alpha = gen_local_[s - 1];
    Matrix<F> rows;
    E ap = one_like(alpha);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < nb; ++j) {
        E bj = embed(s - 1, E::generator(below).pow(j), s);
        rows.push_back((bj * ap).coords());
      }
      ap = ap * alpha;
    }
    auto sol = solve_left(rows, a.coords());
    if (!sol) throw DomainError("element not expressible in tower coordinates");
    std::vector<E> out;
    for (int i = 0; i < d; ++i) {
      Vec<F> c(sol->begin() + i * nb, sol->begin() + (i + 1) * nb);
      out.push_back(E::from_coords(below, c));
    }
    return out;
  }

 private:
  int cap_;
  std::vector<FieldPtr<F>> levels_;
  std::vector<Poly<E>> steps_;
  std::vector<E> theta_images_;  // theta_k in level k+1
  std::vector<E> gen_local_;     // alpha_{k+1} in level k+1
  std::vector<F> mult_;
};

}  // namespace valext
