#pragma once

#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "valext/closure.hpp"
#include "valext/extension.hpp"

namespace valext {

struct GaloisOptions {
  int cap = kDefaultDegreeCap;
  bool parallel = true;
  std::uint64_t seed = 1;
};

/// A subfield of the closure M: its subgroup H = Aut(M/L) and a generator
/// alpha with stabilizer exactly H.
template <class F>
struct Subfield {
  Subgroup group;
  NfElem<F> generator;
  Poly<F> minpoly;
  int degree() const { return minpoly.degree(); }
};

struct ClassificationFlags {
  bool immediate = false, unramified = false, tame = false, local = false, totally_ramified = false,
       totally_wild = false, totally_split = false;
  bool operator==(const ClassificationFlags&) const = default;
};

/// One D-orbit of X = Hom(L, M) and the extension of v to L it corresponds to.
struct OrbitReport {
  std::size_t valuation = 0;  // index in the extension engine's order for L
  long size = 0;              // # D-orbit
  long i_orbits = 0;
  std::vector<long> i_lengths;
  long v_orbits = 0;
  std::vector<long> v_lengths;
  long n_from_groups = 0;     // (g_{M,w} / g_{M,v}) [L:K]
};

template <class F>
struct SubextensionLattice {
  std::array<Subfield<F>, 6> fields;  // L1 .. L6
};

/// Galois closure M of a list of polynomials over a valued base field, its
/// automorphism group, and the decomposition, inertia and ramification
/// groups of x, the first extension of v to M in the stable order.
template <class F>
class GaloisContext {
 public:
  using E = NfElem<F>;

  GaloisContext(const DiscreteValuation<F>& v, const std::vector<Poly<F>>& polys, GaloisOptions opt = {})
      : v_(v), opt_(opt), cl_(build_splitting_closure(polys, opt.cap)), aut_(automorphism_data(cl_, opt.parallel)) {
    ext_ = std::make_shared<ValuedExtension<F>>(v_, cl_.field());
    build_prime_action();
    build_groups();
  }

  const DiscreteValuation<F>& valuation() const { return v_; }
  const SplittingClosure<F>& closure() const { return cl_; }
  const FieldPtr<F>& field() const { return cl_.field(); }
  int degree() const { return cl_.degree(); }
  const PermGroup& group() const { return aut_.group; }
  const ValuedExtension<F>& extension() const { return *ext_; }
  const AutomorphismData<F>& automorphisms() const { return aut_; }
  std::size_t num_valuations() const { return ext_->splitting().g(); }
  std::uint64_t residue_char() const { return v_.residue_char(); }

  const Subgroup& D() const { return d_; }
  const Subgroup& I() const { return i_; }
  const Subgroup& V() const { return vv_; }
  int frobenius() const { return frob_; }
  /// Index of the prime g(P_j).
  int prime_image(int g, int j) const { return act_[g][j]; }
  /// Stabilizer of the j-th extension, computed directly from ideal membership.
  const Subgroup& decomposition_group(int j) const { return stab_[j]; }

  E apply(int g, const E& a) const { return E::from_coords(field(), vec_mul(a.coords(), aut_.matrices[g])); }
  E apply_work(int g, const E& a) const { return ext_->to_work(apply(g, ext_->from_work(a))); }

  Subgroup stabilizer(const std::vector<E>& elems) const {
    Subgroup s;
    for (int g = 0; g < group().order(); ++g) {
      bool fixed = true;
      for (const auto& a : elems)
        if (apply(g, a) != a) {
          fixed = false;
          break;
        }
      if (fixed) s.push_back(g);
    }
    return s;
  }

  /// Subfield generated by an element.
  Subfield<F> subfield_of(const E& alpha) const {
    Subfield<F> s{stabilizer({alpha}), alpha, Poly<F>(v_.proto())};
    s.minpoly = conjugate_polynomial(alpha, s.group);
    return s;
  }
  /// The subfield K(r) for the r-th root of input j.
  Subfield<F> root_field(int j, int r = 0) const { return subfield_of(cl_.roots.at(j).at(r)); }

  /// Fixed field of a subgroup: H-traces of powers of theta, then seeded
  /// random combinations.
  Subfield<F> fixed_field(const Subgroup& h) const {
    if (!group().is_subgroup(h)) throw DomainError("not a subgroup");
    const E theta = E::generator(field());
    std::mt19937_64 rng(opt_.seed);
    const BaseField<F> base = base_of(v_.proto());
    E pw = one_like(theta);
    for (int attempt = 0; attempt < 400; ++attempt) {
      E beta(field());
      if (attempt < degree()) {
        pw = pw * theta;
        beta = pw;
      } else {
        for (int i = 0; i < degree(); ++i) beta = beta + theta.pow(i).scaled(base.random(rng, 3));
      }
      E alpha(field());
      for (int g : h) alpha = alpha + apply(g, beta);
      if (stabilizer({alpha}) == h) return subfield_of(alpha);
    }
    throw ResourceError("no primitive element found for the fixed field");
  }

  /// Subgroup of the field generated over K by the given subfields.
  Subgroup compositum(const Subgroup& a, const Subgroup& b) const { return PermGroup::meet(a, b); }
  Subgroup intersection(const Subgroup& a, const Subgroup& b) const { return group().join(a, b); }

  /// Classification of the extension of x|_{Fix(base)} to Fix(sub), where
  /// sub is contained in base; sub is the stabilizer G_sigma of the chosen
  /// embedding. With base = G this is the extension w/v.
  ClassificationFlags classify(const Subgroup& sub, const Subgroup& base) const {
    const auto& G = group();
    if (!PermGroup::subset(sub, base) || !G.is_subgroup(sub) || !G.is_subgroup(base))
      throw DomainError("subfield does not contain the base field");
    const Subgroup db = PermGroup::meet(d_, base), ib = PermGroup::meet(i_, base), vb = PermGroup::meet(vv_, base);
    const long nb = static_cast<long>(base.size());
    ClassificationFlags c;
    c.immediate = PermGroup::subset(db, sub);
    c.unramified = PermGroup::subset(ib, sub);
    c.tame = PermGroup::subset(vb, sub);
    c.local = PermGroup::product_size(db, sub) == nb;
    c.totally_ramified = PermGroup::product_size(ib, sub) == nb;
    c.totally_wild = PermGroup::product_size(vb, sub) == nb;
    c.totally_split = true;
    for (int d : db)
      for (int b : base)
        if (!PermGroup::contains(sub, G.mul(G.mul(G.inv(b), d), b))) c.totally_split = false;
    return c;
  }
  ClassificationFlags classify(const Subgroup& sub) const { return classify(sub, group().whole()); }

  /// Subgroup of G fixing sigma(L) where the embedding sigma sends L to the
  /// conjugate field g(L).
  Subgroup conjugate_subfield_group(int g, const Subgroup& h) const { return group().conjugate(g, h); }

  /// Subfield of M whose restriction of x is the extension w of v to
  /// L = K[y]/(minpoly of l.generator) with index w in `ext_l`.
  Subfield<F> embedding_for(const Subfield<F>& l, const ValuedExtension<F>& ext_l, std::size_t w) const {
    for (int g = 0; g < group().order(); ++g)
      if (restriction_of_x(l, ext_l, g) == w) {
        E a = apply(g, l.generator);
        return {group().conjugate(g, l.group), a, l.minpoly};
      }
    throw DomainError("no embedding realizes the requested extension");
  }

  /// Index (in ext_l) of the prime of L below x for the embedding
  /// y -> g(alpha); ext_l must be built on l.minpoly.
  std::size_t restriction_of_x(const Subfield<F>& l, const ValuedExtension<F>& ext_l, int g) const {
    return restriction_of_prime(l, ext_l, g, 0);
  }
  std::size_t restriction_of_prime(const Subfield<F>& l, const ValuedExtension<F>& ext_l, int g, int j) const {
    const E image = apply(g, l.generator);
    std::optional<std::size_t> found;
    const auto& ls = ext_l.local();
    for (std::size_t i = 0; i < ls.num_primes(); ++i) {
      bool all = true;
      for (const auto& row : ls.prime(i).basis) {
        E b = ext_l.from_work(E::from_coords(ext_l.work_field(), row));
        E m = substitute(b, image);
        if (!ext_->in_prime(j, m)) {
          all = false;
          break;
        }
      }
      if (all) {
        if (found) throw DomainError("restriction is not unique");
        found = i;
      }
    }
    if (!found) throw DomainError("no prime below");
    return *found;
  }

  /// D-orbits on X = G / H with their extension of v to L and the orbit
  /// counts for I and V.
  std::vector<OrbitReport> orbit_stats(const Subfield<F>& l, const ValuedExtension<F>& ext_l) const {
    const auto& G = group();
    auto cosets = G.left_cosets(l.group, G.whole());
    auto dorb = G.coset_orbits(d_, cosets);
    const long gmv = static_cast<long>(num_valuations());
    std::vector<OrbitReport> out;
    for (const auto& orb : dorb) {
      OrbitReport r;
      r.size = static_cast<long>(orb.size());
      const int g = cosets[orb[0]][0];
      r.valuation = restriction_of_x(l, ext_l, g);
      const auto count = [&](const Subgroup& h, long& num, std::vector<long>& lengths) {
        std::set<int> inorb(orb.begin(), orb.end());
        for (const auto& o : G.coset_orbits(h, cosets)) {
          if (!inorb.count(o[0])) continue;
          ++num;
          lengths.push_back(static_cast<long>(o.size()));
        }
      };
      count(i_, r.i_orbits, r.i_lengths);
      count(vv_, r.v_orbits, r.v_lengths);
      long gmw = 0;
      for (int j = 0; j < static_cast<int>(num_valuations()); ++j)
        if (restriction_of_prime(l, ext_l, G.identity(), j) == r.valuation) ++gmw;
      r.n_from_groups = gmw * l.degree() / gmv;
      out.push_back(std::move(r));
    }
    return out;
  }

  /// #(I \ X)^{D/I}: I-orbits on X mapped to themselves by D.
  long count_fs_one(const Subfield<F>& l) const {
    const auto& G = group();
    auto cosets = G.left_cosets(l.group, G.whole());
    long c = 0;
    for (const auto& o : G.coset_orbits(i_, cosets)) {
      std::set<int> s(o.begin(), o.end());
      bool fixed = true;
      for (int d : d_)
        for (int x : o)
          if (!s.count(PermGroup::coset_of(cosets, G.mul(d, cosets[x][0])))) fixed = false;
      if (fixed) ++c;
    }
    return c;
  }

  /// L // L': the smallest subfield F of L with L (x)_F L'F = LL', via the
  /// coefficients of L' in a basis of LL' over L.
  Subfield<F> field_of_definition(const Subfield<F>& l, const Subfield<F>& lp) const {
    const int dl = l.degree(), dlp = lp.degree();
    const Subgroup comp = compositum(l.group, lp.group);
    const int dc = group().order() / static_cast<int>(comp.size());
    std::vector<E> lpow{one_like(l.generator)}, lppow{one_like(lp.generator)};
    for (int i = 1; i < dl; ++i) lpow.push_back(lpow.back() * l.generator);
    for (int i = 1; i < dlp; ++i) lppow.push_back(lppow.back() * lp.generator);
    Subspace<F> span(v_.proto(), degree());
    std::vector<E> basis;  // B, inside L'
    for (const auto& b : lppow) {
      if (static_cast<int>(basis.size()) * dl == dc) break;
      Subspace<F> trial = span;
      std::size_t added = 0;
      for (const auto& a : lpow) added += trial.add((a * b).coords()) ? 1 : 0;
      if (added == static_cast<std::size_t>(dl)) {
        span = std::move(trial);
        basis.push_back(b);
      }
    }
    if (static_cast<int>(basis.size()) * dl != dc) throw DomainError("no basis of the compositum found");
    Matrix<F> rows;
    for (const auto& b : basis)
      for (const auto& a : lpow) rows.push_back((a * b).coords());
    std::vector<E> coeffs;
    for (const auto& x : lppow) {
      auto sol = solve_left(rows, x.coords());
      if (!sol) throw DomainError("element of L' outside the compositum");
      for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        E c(field());
        for (int i = 0; i < dl; ++i) c = c + lpow[i].scaled((*sol)[bi * dl + i]);
        coeffs.push_back(c);
      }
    }
    return fixed_field(stabilizer(coeffs));
  }

  SubextensionLattice<F> lattice(const Subfield<F>& l) const {
    SubextensionLattice<F> r;
    const auto& G = group();
    r.fields[0] = fixed_field(G.join(d_, l.group));
    r.fields[1] = fixed_field(G.join(i_, l.group));
    r.fields[2] = fixed_field(G.join(vv_, l.group));
    r.fields[3] = field_of_definition(l, fixed_field(d_));
    r.fields[4] = field_of_definition(l, fixed_field(i_));
    r.fields[5] = field_of_definition(l, fixed_field(vv_));
    return r;
  }

  /// All subgroups of G, by repeated joins with single elements.
  std::vector<Subgroup> all_subgroups() const {
    const auto& G = group();
    std::set<Subgroup> seen{G.trivial()};
    std::vector<Subgroup> todo{G.trivial()};
    while (!todo.empty()) {
      Subgroup h = todo.back();
      todo.pop_back();
      for (int g = 0; g < G.order(); ++g) {
        if (PermGroup::contains(h, g)) continue;
        Subgroup j = G.join(h, {g});
        if (seen.insert(j).second) todo.push_back(j);
      }
    }
    return {seen.begin(), seen.end()};
  }

  /// ([K_h:K], [K_i:K_h], [K_v:K_i], [M:K_v]) from fixed-field degrees.
  std::array<int, 4> chain_degrees() const {
    const int kh = fixed_field(d_).degree(), ki = fixed_field(i_).degree(), kv = fixed_field(vv_).degree();
    return {kh, ki / kh, kv / ki, degree() / kv};
  }

  /// D through the local factor of the integral generator: g is in D iff
  /// g(theta') is a root of the local factor at x. Precision is doubled until
  /// the separation bound from the resultants with the other local factors
  /// is below the working precision.
  Subgroup decomposition_by_local_factor() const {
    const auto& ls = ext_->local();
    const auto& adic = ls.valuation().adic();
    const E theta = ls.integral_generator();
    for (long target = ls.precision();; target *= 2) {
      auto lf = ls.ensure(target);
      std::vector<Poly<F>> phi;
      for (std::size_t i = 0; i < ls.num_primes(); ++i) {
        std::vector<F> c;
        for (const auto& x : ls.local_factor(i, *lf)) c.push_back(adic.to_field(x));
        phi.emplace_back(v_.proto(), std::move(c));
      }
      Rational bound(-1);
      bool ok = true;
      for (std::size_t j = 1; j < phi.size(); ++j) {
        F r = resultant(phi[0], phi[j]);
        long o = is_zero(r) ? lf->precision : ls.valuation().order(r);
        if (o + 1 >= lf->precision) ok = false;
        Rational b = make_rational(o, ls.prime(j).n);
        if (b > bound) bound = b;
      }
      if (!ok || bound + 1 >= Rational(lf->precision)) {
        if (2 * target > kPrecisionCap) throw ResourceError("precision cap exceeded in the local factor test");
        continue;
      }
      Subgroup d;
      for (int g = 0; g < group().order(); ++g) {
        E img = apply_work(g, theta);
        auto val = ls.value(0, evaluate(phi[0], img));
        if (val.is_infinite() || val.value() >= Rational(lf->precision)) {
          d.push_back(g);
        } else if (val.value() > bound) {
          throw DomainError("local factor test inconclusive");
        }
      }
      return d;
    }
  }

  /// Order of the residue field k_x.
  Integer residue_field_order() const {
    Integer q = v_.finite().residue_field()->order;
    Integer r = 1;
    for (int i = 0; i < ext_->splitting().extensions[0].f; ++i) r *= q;
    return r;
  }

 private:
  Poly<F> conjugate_polynomial(const E& alpha, const Subgroup& h) const {
    const auto& G = group();
    Poly<E> p = Poly<E>::constant(one_like(alpha));
    for (const auto& c : G.left_cosets(h, G.whole())) p = p * Poly<E>::linear(apply(c[0], alpha));
    std::vector<F> out;
    for (const auto& c : p.coeffs()) {
      if (!c.is_scalar()) throw DomainError("conjugate polynomial not over the base field");
      out.push_back(c.scalar());
    }
    return Poly<F>(v_.proto(), std::move(out));
  }

  void build_prime_action() {
    const auto& ls = ext_->local();
    const int gm = static_cast<int>(ls.num_primes());
    const auto& G = group();
    act_.assign(G.order(), std::vector<int>(gm, -1));
    for (int g = 0; g < G.order(); ++g)
      for (int j = 0; j < gm; ++j) {
        std::vector<E> img;
        for (const auto& row : ls.prime(j).basis) img.push_back(apply_work(g, E::from_coords(ext_->work_field(), row)));
        for (int i = 0; i < gm; ++i) {
          bool all = true;
          for (const auto& b : img)
            if (!ls.in_prime(i, b)) {
              all = false;
              break;
            }
          if (all) {
            act_[g][j] = i;
            break;
          }
        }
        if (act_[g][j] < 0) throw DomainError("automorphism does not map a prime to a prime");
      }
    stab_.assign(gm, {});
    for (int g = 0; g < G.order(); ++g)
      for (int j = 0; j < gm; ++j)
        if (act_[g][j] == j) stab_[j].push_back(g);
  }

  void build_groups() {
    const auto& ls = ext_->local();
    const int n = degree();
    d_ = stab_[0];
    std::vector<E> order;
    for (int t = 0; t < n; ++t) order.push_back(ls.order_element(t));
    const E pi = ls.prime(0).uniformizer;
    const E one = one_like(pi);
    const Integer q = v_.finite().residue_field()->order;
    for (int g : d_) {
      bool inert = true;
      for (const auto& w : order)
        if (!ls.in_prime(0, apply_work(g, w) - w)) {
          inert = false;
          break;
        }
      if (inert) {
        i_.push_back(g);
        if (ls.in_prime(0, apply_work(g, pi) / pi - one)) vv_.push_back(g);
      }
    }
    for (int g : d_) {
      bool frob = true;
      for (const auto& w : order)
        if (!ls.in_prime(0, apply_work(g, w) - w.pow(q.get_ui()))) {
          frob = false;
          break;
        }
      if (frob) {
        frob_ = g;
        break;
      }
    }
    if (frob_ < 0) throw DomainError("no Frobenius element found");
  }

  DiscreteValuation<F> v_;
  GaloisOptions opt_;
  SplittingClosure<F> cl_;
  AutomorphismData<F> aut_;
  std::shared_ptr<ValuedExtension<F>> ext_;
  std::vector<std::vector<int>> act_;
  std::vector<Subgroup> stab_;
  Subgroup d_, i_, vv_;
  int frob_ = -1;
};

/// A homomorphism s: A/N1 -> A/N2 with s(a N1) inside a N1, where
/// N2 <= N1 are normal in A. Images are cosets of N2 given by a
/// representative; nullopt if none exists. Search over images of a
/// generating set, guarded by |A/N1| <= 24.
inline std::optional<std::vector<int>> find_section(const PermGroup& G, const Subgroup& a, const Subgroup& n1,
                                                    const Subgroup& n2) {
  auto q1 = G.left_cosets(n1, a);
  auto q2 = G.left_cosets(n2, a);
  if (q1.size() > 24) throw ResourceError("quotient too large for the section search");
  // generators of A/N1 (as coset indices)
  std::vector<int> gens;
  {
    Subgroup span = n1;
    for (std::size_t c = 0; c < q1.size(); ++c) {
      int g = q1[c][0];
      if (PermGroup::contains(span, g)) continue;
      gens.push_back(g);
      std::vector<int> all(span);
      all.push_back(g);
      span = G.generate(all);
    }
  }
  // candidate images: cosets of N2 inside g N1
  std::vector<std::vector<int>> options;
  for (int g : gens) {
    std::vector<int> opt;
    for (std::size_t c = 0; c < q2.size(); ++c)
      if (PermGroup::contains(q1[PermGroup::coset_of(q1, g)], q2[c][0])) opt.push_back(static_cast<int>(c));
    options.push_back(std::move(opt));
  }
  std::vector<int> pick(gens.size(), 0);
  for (;;) {
    // extend the assignment multiplicatively, checking consistency
    std::vector<int> image(q1.size(), -1);
    image[PermGroup::coset_of(q1, G.identity())] = PermGroup::coset_of(q2, G.identity());
    std::vector<int> frontier{PermGroup::coset_of(q1, G.identity())};
    bool ok = true;
    while (!frontier.empty() && ok) {
      std::vector<int> next;
      for (int c : frontier)
        for (std::size_t k = 0; k < gens.size() && ok; ++k) {
          int prod1 = PermGroup::coset_of(q1, G.mul(gens[k], q1[c][0]));
          int prod2 = PermGroup::coset_of(q2, G.mul(q2[options[k][pick[k]]][0], q2[image[c]][0]));
          if (image[prod1] < 0) {
            image[prod1] = prod2;
            next.push_back(prod1);
          } else if (image[prod1] != prod2) {
            ok = false;
          }
        }
      frontier = std::move(next);
    }
    if (ok) {
      // verify: homomorphism and section of the projection
      for (std::size_t x = 0; x < q1.size() && ok; ++x) {
        if (!PermGroup::contains(q1[x], q2[image[x]][0])) ok = false;
        for (std::size_t y = 0; y < q1.size() && ok; ++y) {
          int xy = PermGroup::coset_of(q1, G.mul(q1[x][0], q1[y][0]));
          int sxy = PermGroup::coset_of(q2, G.mul(q2[image[x]][0], q2[image[y]][0]));
          if (image[xy] != sxy) ok = false;
        }
      }
      if (ok) {
        std::vector<int> out;
        for (auto c : image) out.push_back(q2[c][0]);
        return out;
      }
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == static_cast<int>(options[k].size())) pick[k++] = 0;
    if (k == pick.size()) return std::nullopt;
  }
}

/// s = |I/V| divides |k_x| - 1.
template <class F>
bool roots_of_unity_check(const GaloisContext<F>& ctx) {
  const long s = static_cast<long>(ctx.I().size() / ctx.V().size());
  Integer q = ctx.residue_field_order() - 1;
  return q % s == 0;
}

}  // namespace valext
