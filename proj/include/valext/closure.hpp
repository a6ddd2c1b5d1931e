#pragma once

#include <map>
#include <vector>

#include "valext/nf_factor.hpp"
#include "valext/perm_group.hpp"
#include "valext/tower.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace valext {

/// Splitting field of a list of separable polynomials, built by adjoining
/// roots of nonlinear factors one at a time, with every root of every input
/// expressed in the top field.
template <class F>
struct SplittingClosure {
  using E = NfElem<F>;

  std::vector<Poly<F>> inputs;
  FieldTower<F> tower;
  std::vector<int> step_source;         // input whose root step k adjoins
  std::vector<int> step_root;           // index of that root in roots[step_source[k]]
  std::vector<std::vector<E>> roots;    // per input, in discovery order

  explicit SplittingClosure(const F& proto, int cap) : tower(proto, cap) {}
  int degree() const { return tower.degree(); }
  const FieldPtr<F>& field() const { return tower.top(); }
  int steps() const { return tower.steps(); }
};

template <class F>
SplittingClosure<F> build_splitting_closure(const std::vector<Poly<F>>& inputs, int cap = kDefaultDegreeCap) {
  using E = NfElem<F>;
  if (inputs.empty()) throw DomainError("no polynomials given");
  SplittingClosure<F> cl(inputs[0].proto(), cap);
  for (const auto& f : inputs) {
    if (f.degree() < 1) throw DomainError("constant polynomial");
    if (!is_separable(f)) throw DomainError("polynomial is not separable");
    cl.inputs.push_back(f.monic());
  }
  cl.roots.assign(inputs.size(), {});
  for (;;) {
    const auto& top = cl.tower.top();
    std::optional<std::pair<Poly<E>, int>> pending;
    for (std::size_t j = 0; j < cl.inputs.size(); ++j) {
      Poly<E> q = lift_poly(cl.inputs[j], top);
      for (const auto& r : cl.roots[j]) q = q / Poly<E>::linear(r);
      if (q.degree() < 1) continue;
      if (q.degree() == 1) {
        cl.roots[j].push_back(-q.coeff(0) / q.lc());
        continue;
      }
      for (const auto& [h, m] : factor_over(q.monic())) {
        if (h.degree() == 1) {
          cl.roots[j].push_back(-h.coeff(0));
        } else if (!pending) {
          pending.emplace(h, static_cast<int>(j));
        }
      }
    }
    if (!pending) break;
    const int below = cl.tower.steps();
    cl.tower.add_step(pending->first);
    for (auto& rs : cl.roots)
      for (auto& r : rs) r = cl.tower.embed(below, r, below + 1);
    const int j = pending->second;
    cl.roots[j].push_back(cl.tower.generator(below));
    cl.step_source.push_back(j);
    cl.step_root.push_back(static_cast<int>(cl.roots[j].size()) - 1);
  }
  // the flattened generator is sum c_k y_k
  E theta = E(cl.field());
  for (int k = 0; k < cl.steps(); ++k) theta = theta + cl.tower.generator(k).scaled(cl.tower.multipliers()[k]);
  if (theta != E::generator(cl.field())) throw DomainError("flattened generator mismatch");
  return cl;
}

namespace detail {

template <class F>
struct Partial {
  std::vector<int> choice;
  NfElem<F> sum;
};

template <class F>
std::vector<Partial<F>> expand(const SplittingClosure<F>& cl, const std::vector<Partial<F>>& frontier, int k) {
  const int src = cl.step_source[k];
  std::vector<Partial<F>> out;
  for (const auto& p : frontier)
    for (int r = 0; r < static_cast<int>(cl.roots[src].size()); ++r) {
      bool used = false;
      for (int k2 = 0; k2 < k; ++k2)
        if (cl.step_source[k2] == src && p.choice[k2] == r) used = true;
      if (used) continue;
      Partial<F> c{p.choice, p.sum + cl.roots[src][r].scaled(cl.tower.multipliers()[k])};
      c.choice.push_back(r);
      out.push_back(std::move(c));
    }
  return out;
}

template <class F>
bool relation_holds(const SplittingClosure<F>& cl, int k, const Partial<F>& c) {
  return evaluate(cl.tower.level(k + 1)->modulus, c.sum).is_zero();
}

}  // namespace detail

/// All automorphisms of the closure, as root choices for the adjoined
/// generators: choice[k] indexes roots[step_source[k]]. Level by level
/// backtracking keeps a partial choice when the minimal polynomial of the
/// partial primitive element vanishes on its image.
template <class F>
std::vector<std::vector<int>> enumerate_automorphisms_serial(const SplittingClosure<F>& cl) {
  std::vector<detail::Partial<F>> frontier{{{}, NfElem<F>(cl.field())}};
  for (int k = 0; k < cl.steps(); ++k) {
    auto cand = detail::expand(cl, frontier, k);
    frontier.clear();
    for (auto& c : cand)
      if (detail::relation_holds(cl, k, c)) frontier.push_back(std::move(c));
  }
  std::vector<std::vector<int>> out;
  for (auto& p : frontier) out.push_back(std::move(p.choice));
  return out;
}

/// Same result and order as the serial version; candidate screening at each
/// level runs across threads.
template <class F>
std::vector<std::vector<int>> enumerate_automorphisms_parallel(const SplittingClosure<F>& cl) {
  std::vector<detail::Partial<F>> frontier{{{}, NfElem<F>(cl.field())}};
  for (int k = 0; k < cl.steps(); ++k) {
    auto cand = detail::expand(cl, frontier, k);
    std::vector<char> keep(cand.size(), 0);
    const long n = static_cast<long>(cand.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) keep[i] = detail::relation_holds(cl, k, cand[i]) ? 1 : 0;
    frontier.clear();
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (keep[i]) frontier.push_back(std::move(cand[i]));
  }
  std::vector<std::vector<int>> out;
  for (auto& p : frontier) out.push_back(std::move(p.choice));
  return out;
}

/// Automorphism group of a splitting closure: permutations of the
/// concatenated root list, with matrices for applying each automorphism.
template <class F>
struct AutomorphismData {
  using E = NfElem<F>;
  PermGroup group;
  std::vector<Matrix<F>> matrices;  // row i: image of theta^i
  std::vector<E> theta_images;      // sigma(theta)
  std::vector<std::pair<int, int>> root_index;  // flat root index -> (input, position)
};

template <class F>
AutomorphismData<F> automorphism_data(const SplittingClosure<F>& cl, bool parallel = true) {
  using E = NfElem<F>;
  auto choices = parallel ? enumerate_automorphisms_parallel(cl) : enumerate_automorphisms_serial(cl);
  const int n = cl.degree();
  if (static_cast<int>(choices.size()) != n) throw DomainError("closure is not normal");
  // identity first
  for (std::size_t a = 0; a < choices.size(); ++a)
    if (choices[a] == cl.step_root) {
      std::swap(choices[0], choices[a]);
      break;
    }
  AutomorphismData<F> ad;
  std::vector<int> offset;
  int total = 0;
  for (std::size_t j = 0; j < cl.roots.size(); ++j) {
    offset.push_back(total);
    for (std::size_t r = 0; r < cl.roots[j].size(); ++r) ad.root_index.emplace_back(static_cast<int>(j), static_cast<int>(r));
    total += static_cast<int>(cl.roots[j].size());
  }
  const long count = static_cast<long>(choices.size());
  std::vector<Perm> perms(count);
  ad.matrices.assign(count, {});
  ad.theta_images.assign(count, E(cl.field()));
  std::vector<char> bad(count, 0);
  const auto build = [&](long a) {
    E th(cl.field());
    for (int k = 0; k < cl.steps(); ++k)
      th = th + cl.roots[cl.step_source[k]][choices[a][k]].scaled(cl.tower.multipliers()[k]);
    Matrix<F> m;
    E pw = one_like(th);
    for (int i = 0; i < n; ++i) {
      m.push_back(pw.coords());
      pw = pw * th;
    }
    Perm p(total, -1);
    for (std::size_t j = 0; j < cl.roots.size(); ++j)
      for (std::size_t r = 0; r < cl.roots[j].size(); ++r) {
        E img = E::from_coords(cl.field(), vec_mul(cl.roots[j][r].coords(), m));
        for (std::size_t r2 = 0; r2 < cl.roots[j].size(); ++r2)
          if (cl.roots[j][r2] == img) p[offset[j] + r] = offset[j] + static_cast<int>(r2);
        if (p[offset[j] + r] < 0) bad[a] = 1;
      }
    perms[a] = std::move(p);
    ad.matrices[a] = std::move(m);
    ad.theta_images[a] = th;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long a = 0; a < count; ++a) build(a);
  } else {
    for (long a = 0; a < count; ++a) build(a);
  }
  for (auto b : bad)
    if (b) throw DomainError("automorphism does not permute the roots");
  ad.group = PermGroup(std::move(perms));
  return ad;
}

}  // namespace valext
