#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "valext/errors.hpp"

namespace valext {

using Perm = std::vector<int>;
/// A subset of group elements, sorted by index.
using Subgroup = std::vector<int>;

/// A finite permutation group with a precomputed multiplication table.
/// mul(a, b) is the composition a after b.
class PermGroup {
 public:
  PermGroup() = default;
  explicit PermGroup(std::vector<Perm> elems) : elems_(std::move(elems)) {
    const std::size_t n = elems_.size();
    if (n == 0) throw DomainError("empty group");
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < n; ++i) index[elems_[i]] = static_cast<int>(i);
    if (index.size() != n) throw DomainError("duplicate group elements");
    table_.assign(n, std::vector<int>(n, -1));
    inv_.assign(n, -1);
    const std::size_t deg = elems_[0].size();
    Perm id(deg);
    std::iota(id.begin(), id.end(), 0);
    auto it = index.find(id);
    if (it == index.end()) throw DomainError("identity missing");
    id_ = it->second;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Perm c(deg);
        for (std::size_t k = 0; k < deg; ++k) c[k] = elems_[a][elems_[b][k]];
        auto f = index.find(c);
        if (f == index.end()) throw DomainError("set of permutations is not closed under composition");
        table_[a][b] = f->second;
        if (f->second == id_) inv_[a] = static_cast<int>(b);
      }
    for (auto x : inv_)
      if (x < 0) throw DomainError("element without inverse");
  }

  int order() const { return static_cast<int>(elems_.size()); }
  int identity() const { return id_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  const Perm& perm(int a) const { return elems_[a]; }
  const std::vector<Perm>& elements() const { return elems_; }

  Subgroup whole() const {
    Subgroup s(elems_.size());
    std::iota(s.begin(), s.end(), 0);
    return s;
  }
  Subgroup trivial() const { return {id_}; }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != id_; x = mul(a, x)) ++k;
    return k;
  }

  /// Subgroup generated by gens.
  Subgroup generate(const std::vector<int>& gens) const {
    std::set<int> s{id_};
    std::vector<int> frontier{id_};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int g : gens) {
          int y = mul(g, x);
          if (s.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    return {s.begin(), s.end()};
  }
  Subgroup join(const Subgroup& a, const Subgroup& b) const {
    std::vector<int> g(a);
    g.insert(g.end(), b.begin(), b.end());
    return generate(g);
  }
  static Subgroup meet(const Subgroup& a, const Subgroup& b) {
    Subgroup r;
    std::ranges::set_intersection(a, b, std::back_inserter(r));
    return r;
  }
  static bool contains(const Subgroup& h, int g) { return std::ranges::binary_search(h, g); }
  static bool subset(const Subgroup& a, const Subgroup& b) { return std::ranges::includes(b, a); }

  bool is_subgroup(const Subgroup& h) const {
    if (h.empty() || !contains(h, id_)) return false;
    for (int a : h) {
      if (!contains(h, inv(a))) return false;
      for (int b : h)
        if (!contains(h, mul(a, b))) return false;
    }
    return true;
  }
  Subgroup conjugate(int g, const Subgroup& h) const {
    Subgroup r;
    for (int x : h) r.push_back(mul(mul(g, x), inv(g)));
    std::ranges::sort(r);
    return r;
  }
  bool is_normal(const Subgroup& n, const Subgroup& in) const {
    for (int g : in)
      if (conjugate(g, n) != n) return false;
    return true;
  }
  /// Largest normal subgroup of G inside h.
  Subgroup core(const Subgroup& h) const {
    Subgroup r = h;
    for (int g = 0; g < order(); ++g) r = meet(r, conjugate(g, h));
    return r;
  }
  /// |A B| for subgroups A, B.
  static long product_size(const Subgroup& a, const Subgroup& b) {
    return static_cast<long>(a.size()) * static_cast<long>(b.size()) / static_cast<long>(meet(a, b).size());
  }
  bool is_abelian(const Subgroup& h) const {
    for (int a : h)
      for (int b : h)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Left cosets g H of h inside `in`, each as a sorted element list;
  /// ordered by smallest element. The coset of the identity comes first.
  std::vector<Subgroup> left_cosets(const Subgroup& h, const Subgroup& in) const {
    std::vector<Subgroup> out;
    std::set<int> seen;
    for (int g : in) {
      if (seen.count(g)) continue;
      Subgroup c;
      for (int x : h) c.push_back(mul(g, x));
      std::ranges::sort(c);
      for (int x : c) seen.insert(x);
      out.push_back(std::move(c));
    }
    return out;
  }
  /// Index of the coset containing g.
  static int coset_of(const std::vector<Subgroup>& cosets, int g) {
    for (std::size_t i = 0; i < cosets.size(); ++i)
      if (contains(cosets[i], g)) return static_cast<int>(i);
    return -1;
  }
  /// Orbits of `acting` on the cosets (by left multiplication), as lists of
  /// coset indices.
  std::vector<std::vector<int>> coset_orbits(const Subgroup& acting, const std::vector<Subgroup>& cosets) const {
    std::vector<int> mark(cosets.size(), -1);
    std::vector<std::vector<int>> orbits;
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      if (mark[c] >= 0) continue;
      std::set<int> orb;
      for (int a : acting) orb.insert(coset_of(cosets, mul(a, cosets[c][0])));
      for (int o : orb) mark[o] = static_cast<int>(orbits.size());
      orbits.emplace_back(orb.begin(), orb.end());
    }
    return orbits;
  }

  /// True if the quotient a/n (n normal in a) is cyclic.
  bool quotient_is_cyclic(const Subgroup& a, const Subgroup& n) const {
    const std::size_t q = a.size() / n.size();
    for (int g : a) {
      int k = 1;
      for (int x = g; !contains(n, x); x = mul(g, x)) ++k;
      if (static_cast<std::size_t>(k) == q) return true;
    }
    return false;
  }

 private:
  std::vector<Perm> elems_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  int id_ = 0;
};

}  // namespace valext
