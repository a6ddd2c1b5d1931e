#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "valext/base_field.hpp"
#include "valext/hensel.hpp"
#include "valext/local_structure.hpp"
#include "valext/nf_factor.hpp"
#include "valext/tower.hpp"

namespace valext {

/// The nine invariants of an extension w/v plus the number g of extensions.
struct InvariantBundle {
  long e = 1, e_t = 1, e_w = 1, f = 1, f_s = 1, f_i = 1, n = 1, d = 1, d_w = 1;
  long g = 1;

  bool operator==(const InvariantBundle&) const = default;
  /// Componentwise product (g excluded: it is not multiplicative).
  InvariantBundle times(const InvariantBundle& o) const {
    InvariantBundle r;
    r.e = e * o.e;
    r.e_t = e_t * o.e_t;
    r.e_w = e_w * o.e_w;
    r.f = f * o.f;
    r.f_s = f_s * o.f_s;
    r.f_i = f_i * o.f_i;
    r.n = n * o.n;
    r.d = d * o.d;
    r.d_w = d_w * o.d_w;
    r.g = 0;
    return r;
  }
  bool same_nine(const InvariantBundle& o) const {
    return e == o.e && e_t == o.e_t && e_w == o.e_w && f == o.f && f_s == o.f_s && f_i == o.f_i && n == o.n &&
           d == o.d && d_w == o.d_w;
  }
};

/// Largest divisor of e coprime to p.
inline long tame_part(long e, std::uint64_t p) {
  if (p == 0) return e;
  while (e % static_cast<long>(p) == 0) e /= static_cast<long>(p);
  return e;
}

/// Bundle from (e, f, n) at residue characteristic p, perfect residue fields.
inline InvariantBundle make_bundle(long e, long f, long n, std::uint64_t p, long g = 1) {
  InvariantBundle b;
  b.e = e;
  b.e_t = tame_part(e, p);
  b.e_w = e / b.e_t;
  b.f = f;
  b.f_s = f;
  b.f_i = 1;
  b.n = n;
  if (n % (e * f) != 0) throw DomainError("local degree not divisible by e*f");
  b.d = n / (e * f);
  b.d_w = b.d * b.e_w * b.f_i;
  b.g = g;
  return b;
}

template <class F>
struct ExtensionValuation {
  std::size_t index = 0;  // position in the stable order
  int e = 1, f = 1, n = 1;
  Rational slope;                  // Newton slope of the local factor
  GFPoly residue_factor;           // local factor modulo the prime
  Poly<GF> residue_field_modulus;  // defining polynomial of k_w over k_v
};

template <class F>
struct SplittingData {
  std::vector<ExtensionValuation<F>> extensions;
  int degree = 0;
  std::size_t g() const { return extensions.size(); }
  long sum_n() const {
    long s = 0;
    for (const auto& w : extensions) s += w.n;
    return s;
  }
};

/// A finite separable extension L = F[x]/(f) of a valued base field with
/// all extensions of the valuation. For the place 1/t of F_p(t) the data is
/// carried through t -> 1/t to the place t.
template <class F>
class ValuedExtension {
 public:
  using E = NfElem<F>;

  ValuedExtension(const DiscreteValuation<F>& v, const Poly<F>& f, long min_precision = 0)
      : ValuedExtension(v, checked_field(f), min_precision) {}

  ValuedExtension(const DiscreteValuation<F>& v, FieldPtr<F> field, long min_precision = 0)
      : v_(v), field_(std::move(field)) {
    const Poly<F>& f = field_->modulus;
    std::vector<F> c;
    for (const auto& a : f.coeffs()) c.push_back(v.transport(a));
    work_field_ = v.is_finite() ? field_ : make_field(Poly<F>(f.proto(), std::move(c)), "a");
    local_ = std::make_shared<const LocalStructure<F>>(v.finite(), work_field_, min_precision);
    build_splitting();
  }

  const DiscreteValuation<F>& valuation() const { return v_; }
  const FieldPtr<F>& field() const { return field_; }
  const FieldPtr<F>& work_field() const { return work_field_; }
  const LocalStructure<F>& local() const { return *local_; }
  std::shared_ptr<const LocalStructure<F>> local_ptr() const { return local_; }
  const SplittingData<F>& splitting() const { return split_; }
  int degree() const { return field_->degree(); }
  std::uint64_t residue_char() const { return v_.residue_char(); }

  /// Carry an element of L to the working field.
  E to_work(const E& a) const {
    if (v_.is_finite()) return a;
    std::vector<F> c;
    for (const auto& x : a.coords()) c.push_back(v_.transport(x));
    return E::from_coords(work_field_, c);
  }

  E from_work(const E& a) const {
    if (v_.is_finite()) return a;
    std::vector<F> c;
    for (const auto& x : a.coords()) c.push_back(v_.transport(x));
    return E::from_coords(field_, c);
  }

  InvariantBundle invariants(std::size_t i) const {
    const auto& w = split_.extensions.at(i);
    return make_bundle(w.e, w.f, w.n, residue_char(), static_cast<long>(split_.g()));
  }

  ValueGroupElement value(std::size_t i, const E& a) const { return local_->value(i, to_work(a)); }
  bool in_prime(std::size_t i, const E& a) const { return local_->in_prime(i, to_work(a)); }

 private:
  static FieldPtr<F> checked_field(const Poly<F>& f) {
    if (f.degree() < 1 || !f.is_monic()) throw DomainError("defining polynomial must be monic of degree >= 1");
    if (!is_separable(f)) throw DomainError("defining polynomial is not separable");
    if (!is_irreducible_base(f)) throw DomainError("defining polynomial is reducible");
    return make_field(f, "a");
  }

  void build_splitting() {
    split_.degree = field_->degree();
    const auto& ls = *local_;
    for (std::size_t i = 0; i < ls.num_primes(); ++i) {
      const auto& p = ls.prime(i);
      ExtensionValuation<F> w;
      w.index = i;
      w.e = p.e;
      w.f = p.f;
      w.n = p.n;
      w.slope = Rational(ls.generator_scale()) - p.generator_value;
      w.residue_factor = p.residue_factor;
      w.residue_field_modulus = residue_modulus(i);
      split_.extensions.push_back(std::move(w));
    }
  }

  /// Minimal polynomial over k_v of a generator of O/P_i.
  Poly<GF> residue_modulus(std::size_t i) const {
    const auto& ls = *local_;
    const auto& alg = ls.residue_algebra();
    const auto& p = ls.prime(i);
    Subspace<GF> ideal(alg.zero, alg.n, p.ideal);
    std::mt19937_64 rng(0x5eed + i);
    for (int trial = 0; trial < 200; ++trial) {
      Vec<GF> a(alg.n, alg.zero);
      if (trial < static_cast<int>(alg.n)) {
        a = alg.basis_vector(static_cast<std::size_t>(trial));
      } else {
        for (auto& x : a) x = GF::random(alg.zero.context(), rng);
      }
      Matrix<GF> rows;
      Vec<GF> cur = alg.one;
      for (int d = 0; d <= p.f; ++d) {
        Vec<GF> red = ideal.reduce(cur);
        if (!rows.empty()) {
          auto sol = solve_left(rows, red);
          if (sol) {
            if (d < p.f) break;
            std::vector<GF> c(d + 1, alg.zero);
            for (int k = 0; k < d; ++k) c[k] = -(*sol)[k];
            c[d] = one_like(alg.zero);
            return Poly<GF>(alg.zero, std::move(c));
          }
        }
        rows.push_back(red);
        cur = alg.mul(cur, a);
      }
    }
    throw DomainError("no residue field generator found");
  }

  DiscreteValuation<F> v_;
  FieldPtr<F> field_, work_field_;
  std::shared_ptr<const LocalStructure<F>> local_;
  SplittingData<F> split_;
};

/// When the reduction of f is separable the extensions correspond to its
/// irreducible factors, with e = 1 and f = their degrees.
struct FastPathResult {
  bool applicable = false;
  std::vector<int> residue_degrees;  // sorted
};

template <class F>
FastPathResult explicit_extensions_fast_path(const DiscreteValuation<F>& v, const Poly<F>& f) {
  FastPathResult r;
  const auto w = v.finite();
  std::vector<GF> c;
  for (const auto& a : f.coeffs()) {
    F b = v.transport(a);
    if (!is_zero(b) && w.order(b) < 0) return r;
    c.push_back(w.residue(b));
  }
  GFPoly fb(GF(w.residue_field()), std::move(c));
  if (fb.degree() != f.degree() || !is_separable(fb)) return r;
  r.applicable = true;
  for (const auto& [g, m] : factor_finite(fb)) r.residue_degrees.push_back(g.degree());
  std::ranges::sort(r.residue_degrees);
  return r;
}


/// A monic local factor of f over the completion, known modulo pi^precision.
template <class F>
struct LocalFactor {
  using Adic = typename DiscreteValuation<F>::Adic;
  using R = typename Adic::R;

  Adic adic;
  std::vector<R> coeffs;  // lowest degree first, reduced mod pi^precision
  long precision = 0;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// Coefficient k; nullopt when it is zero to the known precision.
  std::optional<LocalElement<Adic>> coefficient(std::size_t k) const {
    return LocalElement<Adic>::from_residue_class(adic, coeffs.at(k), precision);
  }
  Poly<F> approximation(const F& proto) const {
    std::vector<F> c;
    for (const auto& x : coeffs) c.push_back(adic.to_field(x));
    return Poly<F>(proto, std::move(c));
  }
};

inline constexpr long kDefaultPrecision = 0;

/// Factor a monic separable f with coefficients in O_v into monic
/// irreducible factors over the completion, certified modulo pi^precision.
/// precision = 0 selects 2 (v(disc f) + deg f). For the place 1/t the
/// factors are in the variable 1/t.
template <class F>
std::vector<LocalFactor<F>> hensel_factor(const DiscreteValuation<F>& v, const Poly<F>& f, long precision = 0) {
  using Adic = typename DiscreteValuation<F>::Adic;
  using R = typename Adic::R;
  if (f.degree() < 1 || !f.is_monic()) throw DomainError("hensel_factor needs a monic polynomial of degree >= 1");
  const auto w = v.finite();
  std::vector<F> tc;
  for (const auto& a : f.coeffs()) tc.push_back(v.transport(a));
  Poly<F> g(f.proto(), std::move(tc));
  for (const auto& a : g.coeffs())
    if (!is_zero(a) && w.order(a) < 0) throw DomainError("coefficients must lie in the valuation ring");
  if (!is_separable(g)) throw DomainError("polynomial is not separable");
  const long disc = w.order(discriminant(g));
  if (precision <= 0) precision = 2 * (disc + g.degree());
  if (precision > kPrecisionCap) throw ResourceError("precision cap exceeded");
  const Adic& adic = w.adic();
  const R mod = adic.pi_pow(precision);

  std::vector<LocalFactor<F>> out;
  for (const auto& [h, mult] : base_of(f.proto()).factor(g)) {
    if (h.degree() == 1) {
      LocalFactor<F> lf{adic, {}, precision};
      for (const auto& c : h.coeffs()) lf.coeffs.push_back(adic.reduce(adic.from_field(c, mod), mod));
      out.push_back(std::move(lf));
      continue;
    }
    LocalStructure<F> ls(w, make_field(h, "a"), precision);
    auto lifted = ls.lifted();
    for (std::size_t i = 0; i < ls.num_primes(); ++i) {
      LocalFactor<F> lf{adic, {}, precision};
      for (const auto& c : ls.local_factor(i, *lifted)) lf.coeffs.push_back(adic.reduce(c, mod));
      out.push_back(std::move(lf));
    }
  }

  // certification
  const auto fail = [&](const char* what) { throw PrecisionError(what, static_cast<int>(2 * precision)); };
  RPoly<R> prod{adic.one()};
  for (const auto& lf : out) {
    prod = rpoly_mul(prod, lf.coeffs, adic.zero());
    for (auto& c : prod) c = adic.reduce(c, mod);
  }
  for (int k = 0; k <= g.degree(); ++k)
    if (adic.reduce(adic.from_field(g.coeff(k), mod), mod) != prod.at(k)) fail("product does not match f");
  std::vector<Poly<F>> approx;
  for (const auto& lf : out) approx.push_back(lf.approximation(f.proto()));
  for (std::size_t i = 0; i < approx.size(); ++i)
    for (std::size_t j = i + 1; j < approx.size(); ++j) {
      F r = resultant(approx[i], approx[j]);
      if (is_zero(r) || w.order(r) >= precision) fail("local factors not certified coprime");
    }
  const Poly<F> dg = g.derivative();
  for (const auto& a : approx) {
    if (a.degree() != 1) continue;
    F root = -a.coeff(0);
    F fr = g.eval(root), dr = dg.eval(root);
    if (is_zero(dr)) fail("root certificate failed");
    if (!is_zero(fr) && w.order(fr) <= 2 * w.order(dr)) fail("root certificate failed");
  }
  return out;
}

/// Value of a at the i-th extension of the valuation of `ext`.
template <class F>
ValueGroupElement value_in_extension(const ValuedExtension<F>& ext, std::size_t i, const NfElem<F>& a) {
  return ext.value(i, a);
}

/// Two valued steps K c L1 c L2 with L2 = L1[y]/(h). The step from L1 to L2
/// is handled through the flattened field M = L2 over K.
template <class F>
struct TowerComposition {
  InvariantBundle composite;  // w2 over v
  InvariantBundle lower;      // w1 over v
  InvariantBundle upper;      // w2 over w1
  std::size_t w1 = 0;         // index of the restriction of w2 in the lower extension
  std::vector<std::size_t> above_w1;  // indices of all w2' over w1
  long sum_upper_n = 0;       // sum of n(w2'/w1) over w2' above w1
};

/// Invariants of w2 over w1 over v, where lower describes L1/K and upper
/// describes the flattened L2/K, `embed` maps L1 into L2.
template <class F, class Embed>
TowerComposition<F> tower_compose(const ValuedExtension<F>& lower, const ValuedExtension<F>& upper, std::size_t w2,
                                  Embed&& embed) {
  TowerComposition<F> tc;
  const auto& L1 = lower.local();
  const auto& L2 = upper.local();
  const auto restrict_to = [&](std::size_t j) {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < L1.num_primes(); ++i) {
      bool all = true;
      for (const auto& row : L1.prime(i).basis) {
        NfElem<F> b = upper.to_work(embed(lower.from_work(NfElem<F>::from_coords(lower.work_field(), row))));
        if (!L2.in_prime(j, b)) {
          all = false;
          break;
        }
      }
      if (all) {
        if (found) throw DomainError("restriction is not unique");
        found = i;
      }
    }
    if (!found) throw DomainError("incompatible restriction");
    return *found;
  };
  tc.w1 = restrict_to(w2);
  const auto p = lower.residue_char();
  const auto& a = lower.splitting().extensions[tc.w1];
  const auto& b = upper.splitting().extensions[w2];
  if (b.e % a.e != 0 || b.f % a.f != 0 || b.n % a.n != 0) throw DomainError("incompatible restriction");
  tc.composite = upper.invariants(w2);
  tc.lower = lower.invariants(tc.w1);
  for (std::size_t j = 0; j < L2.num_primes(); ++j) {
    if (restrict_to(j) != tc.w1) continue;
    tc.above_w1.push_back(j);
    tc.sum_upper_n += upper.splitting().extensions[j].n / a.n;
  }
  tc.upper = make_bundle(b.e / a.e, b.f / a.f, b.n / a.n, p, static_cast<long>(tc.above_w1.size()));
  return tc;
}

}  // namespace valext
