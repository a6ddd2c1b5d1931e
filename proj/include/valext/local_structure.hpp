#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "valext/lattice.hpp"
#include "valext/number_field.hpp"
#include "valext/residue_algebra.hpp"
#include "valext/truncated.hpp"
#include "valext/valuation.hpp"

namespace valext {

inline constexpr long kPrecisionCap = 1L << 14;

/// Local structure of a finite separable extension L = F[X]/(f) over a
/// finite place v: the v-maximal order O (Round 2), the primes of O above v
/// with their idempotents, and the local factors of an integral generator.
/// Values of elements are computed from local norms at finite precision,
/// doubling the precision when a norm vanishes to the working precision.
template <class F>
class LocalStructure {
 public:
  using Val = DiscreteValuation<F>;
  using Adic = typename Val::Adic;
  using R = typename Adic::R;
  using E = NfElem<F>;
  using Trunc = TruncatedRing<Adic>;
  using RVec = typename Trunc::RVec;
  using RMat = typename Trunc::RMat;

  struct Prime {
    int n = 0;  // local degree
    int e = 0;
    int f = 0;
    Vec<GF> idempotent;          // in O / pi O
    Matrix<GF> ideal;            // basis of P / pi O inside O / pi O
    Matrix<F> basis;             // HNF basis of P, power coordinates
    E uniformizer;               // value 1/e at P, 0 at the other primes
    GFPoly residue_factor;       // the local factor modulo pi
    Rational generator_value;    // value of the integral generator
    std::size_t original_index;  // position before sorting
  };

  struct Lifted {
    long precision;
    Trunc ring;
    std::vector<RMat> mult;             // mult[j]: multiplication by omega_j, O-coordinates
    std::vector<RVec> idempotent;       // per prime
    std::vector<RMat> summand_basis;    // per prime, unit echelon rows
    std::vector<std::vector<std::size_t>> pivots;
  };

  LocalStructure(const Val& v, FieldPtr<F> field, long min_precision = 0) : v_(v), L_(std::move(field)) {
    if (!v_.is_finite()) throw DomainError("local structure needs a finite place");
    n_ = L_->degree();
    setup_generator();
    round2();
    decompose();
    long p0 = std::max(min_precision, 2 * (disc_order_ + n_));
    p0 = std::max(p0, 4L);
    ensure(p0);
    finish_primes();
  }
  LocalStructure(const LocalStructure&) = delete;
  LocalStructure& operator=(const LocalStructure&) = delete;

  const Val& valuation() const { return v_; }
  const FieldPtr<F>& field() const { return L_; }
  int degree() const { return n_; }
  std::size_t num_primes() const { return primes_.size(); }
  const Prime& prime(std::size_t i) const { return primes_[i]; }
  const std::vector<Prime>& primes() const { return primes_; }
  const Matrix<F>& order_basis() const { return w_; }
  const E& integral_generator() const { return theta_; }
  const Poly<F>& integral_polynomial() const { return g_; }
  long generator_scale() const { return scale_k_; }
  long discriminant_order() const { return disc_order_; }
  const ResidueAlgebra& residue_algebra() const { return alg_; }
  const Matrix<GF>& radical() const { return radical_; }
  std::size_t round2_iterations() const { return round2_iters_; }
  long precision() const {
    std::lock_guard<std::mutex> lk(mu_);
    return lifted_->precision;
  }
  std::shared_ptr<const Lifted> lifted() const {
    std::lock_guard<std::mutex> lk(mu_);
    return lifted_;
  }

  /// Coordinates of b with respect to the basis of O.
  Vec<F> order_coords(const E& b) const { return vec_mul(b.coords(), winv_); }
  bool in_order(const E& b) const { return is_integral_vector(order_coords(b), v_); }
  /// Image in O / pi O of an element of O.
  Vec<GF> residue_vector(const E& b) const {
    Vec<F> c = order_coords(b);
    Vec<GF> r;
    for (const auto& x : c) r.push_back(v_.residue(x));
    return r;
  }
  /// Exact test b in P_i.
  bool in_prime(std::size_t i, const E& b) const {
    if (!in_order(b)) return false;
    Subspace<GF> s(alg_.zero, n_, primes_[i].ideal);
    return s.contains(residue_vector(b));
  }
  E order_element(std::size_t j) const { return E::from_coords(L_, w_[j]); }

  /// Normalized value v_{w_i}(b) in (1/e_i)Z, with v_{w_i} extending v.
  ValueGroupElement value(std::size_t i, const E& b) const {
    if (b.is_zero()) return ValueGroupElement::infinity();
    Vec<F> u = order_coords(b);
    long s = min_order(u, v_);
    F pis = pi_power_field(-s);
    for (auto& x : u) x = x * pis;
    long need = 0;
    for (;;) {
      auto lf = lifted();
      if (need > lf->precision) lf = ensure(need);
      auto d = local_norm(*lf, i, u);
      if (d) return ValueGroupElement(Rational(s) + make_rational(lf->ring.order(*d), primes_[i].n));
      need = 2 * lf->precision;
      if (need > kPrecisionCap) throw ResourceError("precision cap exceeded while computing a value");
    }
  }

  /// Local factor of the integral generator at prime i, modulo pi^N.
  RVec local_factor(std::size_t i, const Lifted& lf) const {
    const std::size_t k = primes_[i].original_index;
    Vec<F> t = order_coords(theta_);
    RVec tr = to_r(lf, t);
    RMat mt = combine(lf, tr);
    RMat sub = restrict(lf, k, mt);
    return lf.ring.charpoly(sub);
  }

  /// Multiplication matrix (O-coordinates, mod pi^N) of an element of O
  /// restricted to the i-th summand.
  std::optional<R> local_norm(const Lifted& lf, std::size_t i, const Vec<F>& ocoords) const {
    RVec ur = to_r(lf, ocoords);
    RMat m = combine(lf, ur);
    return lf.ring.det(restrict(lf, primes_[i].original_index, m));
  }

  /// Make sure lifted data exists at precision >= target.
  std::shared_ptr<const Lifted> ensure(long target) const {
    std::lock_guard<std::mutex> lk(mu_);
    if (lifted_ && lifted_->precision >= target) return lifted_;
    if (target > kPrecisionCap) throw ResourceError("precision cap exceeded");
    lifted_ = std::make_shared<const Lifted>(build_lifted(target));
    return lifted_;
  }

  F pi_power_field(long k) const {
    const auto& adic = v_.adic();
    return k >= 0 ? adic.to_field(adic.pi_pow(k)) : one_like(v_.proto()) / adic.to_field(adic.pi_pow(-k));
  }

 private:
  RVec to_r(const Lifted& lf, const Vec<F>& x) const {
    RVec r;
    for (const auto& a : x) r.push_back(lf.ring.adic.from_field(a, lf.ring.m));
    return r;
  }
  RMat combine(const Lifted& lf, const RVec& u) const {
    RMat m(n_, RVec(n_, lf.ring.adic.zero()));
    for (int j = 0; j < n_; ++j) {
      if (lf.ring.is_zero(u[j])) continue;
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) m[a][b] += u[j] * lf.mult[j][a][b];
    }
    for (auto& row : m)
      for (auto& x : row) x = lf.ring.red(x);
    return m;
  }
  RMat restrict(const Lifted& lf, std::size_t k, const RMat& m) const {
    const auto& basis = lf.summand_basis[k];
    const auto& piv = lf.pivots[k];
    RMat out;
    for (const auto& b : basis) {
      RVec img = lf.ring.vmul(b, m);
      RVec row;
      for (auto c : piv) row.push_back(img[c]);
      out.push_back(std::move(row));
    }
    return out;
  }

  void setup_generator() {
    const Poly<F>& f = L_->modulus;
    long k = 0;
    for (int i = 0; i < n_; ++i) {
      if (is_zero(f.coeff(i))) continue;
      long o = v_.order(f.coeff(i));
      if (o < 0) k = std::max(k, (-o + (n_ - i) - 1) / (n_ - i));
    }
    scale_k_ = k;
    F c = pi_power_field(k);
    theta_ = E::generator(L_).scaled(c);
    std::vector<F> gc(n_ + 1, zero_like(v_.proto()));
    F cp = one_like(v_.proto());
    for (int i = n_; i >= 0; --i) {
      gc[i] = f.coeff(i) * cp;
      cp = cp * c;
    }
    g_ = Poly<F>(v_.proto(), std::move(gc));
    disc_order_ = v_.order(discriminant(g_));
    if (disc_order_ >= DiscreteValuation<F>::kInfinite) throw DomainError("defining polynomial is not separable");
  }

  void build_structure() {
    winv_ = *inverse(w_);
    omega_.clear();
    for (int j = 0; j < n_; ++j) omega_.push_back(E::from_coords(L_, w_[j]));
    mult_exact_.assign(n_, Matrix<F>(n_, Vec<F>(n_, zero_like(v_.proto()))));
    GF z(v_.residue_field());
    alg_.zero = z;
    alg_.n = n_;
    alg_.c.assign(n_, std::vector<Vec<GF>>(n_, Vec<GF>(n_, z)));
    for (int j = 0; j < n_; ++j)
      for (int k = j; k < n_; ++k) {
        Vec<F> c = order_coords(omega_[j] * omega_[k]);
        mult_exact_[j][k] = c;
        mult_exact_[k][j] = c;
        Vec<GF> r;
        for (const auto& x : c) r.push_back(v_.residue(x));
        alg_.c[j][k] = r;
        alg_.c[k][j] = r;
      }
    alg_.one = residue_vector(one_like(theta_));
  }

  Vec<F> lift_residue(const Vec<GF>& s) const {
    Vec<F> o;
    for (const auto& x : s) o.push_back(v_.lift(x));
    return vec_mul(o, w_);
  }

  void round2() {
    w_ = zero_matrix(v_.proto(), n_, n_);
    F c = pi_power_field(scale_k_), cp = one_like(v_.proto());
    for (int i = 0; i < n_; ++i) {
      w_[i][i] = cp;
      cp = cp * c;
    }
    const F pi = pi_power_field(1);
    for (;;) {
      build_structure();
      Matrix<GF> j = alg_.radical();
      if (j.empty()) break;
      Matrix<F> rows;
      for (const auto& s : j) rows.push_back(lift_residue(s));
      for (int k = 0; k < n_; ++k) {
        Vec<F> r = w_[k];
        for (auto& x : r) x = x * pi;
        rows.push_back(r);
      }
      Matrix<F> bi = dvr_hnf(rows, v_, n_);
      Matrix<F> biinv = *inverse(bi);
      std::vector<E> ys;
      for (const auto& row : bi) ys.push_back(E::from_coords(L_, row));
      Matrix<GF> mflat;
      for (int a = 0; a < n_; ++a) {
        Vec<GF> flat;
        for (const auto& y : ys) {
          Vec<F> cc = vec_mul((omega_[a] * y).coords(), biinv);
          for (const auto& x : cc) flat.push_back(v_.residue(x));
        }
        mflat.push_back(std::move(flat));
      }
      Matrix<GF> ker = nullspace(transpose(mflat), n_, alg_.zero);
      if (ker.empty()) break;
      Matrix<F> next;
      const F pinv = one_like(pi) / pi;
      for (const auto& kv : ker) {
        Vec<F> r = lift_residue(kv);
        for (auto& x : r) x = x * pinv;
        next.push_back(r);
      }
      for (const auto& row : w_) next.push_back(row);
      w_ = dvr_hnf(next, v_, n_);
      ++round2_iters_;
      if (round2_iters_ > 4096) throw ResourceError("Round 2 did not terminate");
    }
  }

  void decompose() {
    radical_ = alg_.radical();
    auto idem = alg_.primitive_idempotents(radical_);
    Matrix<GF> all;
    for (int k = 0; k < n_; ++k) all.push_back(alg_.basis_vector(k));
    const F pi = pi_power_field(1);
    for (std::size_t i = 0; i < idem.size(); ++i) {
      Prime p;
      p.idempotent = idem[i];
      p.n = static_cast<int>(alg_.rank_of_products(idem[i], all));
      p.f = p.n - static_cast<int>(alg_.rank_of_products(idem[i], radical_));
      Subspace<GF> ideal(alg_.zero, n_, radical_);
      Vec<GF> ce = alg_.sub_one(idem[i]);
      for (int k = 0; k < n_; ++k) ideal.add(alg_.mul(ce, all[k]));
      p.ideal = ideal.basis();
      Matrix<F> rows;
      for (const auto& s : p.ideal) rows.push_back(lift_residue(s));
      for (int k = 0; k < n_; ++k) {
        Vec<F> r = w_[k];
        for (auto& x : r) x = x * pi;
        rows.push_back(r);
      }
      p.basis = dvr_hnf(rows, v_, n_);
      p.original_index = i;
      primes_.push_back(std::move(p));
    }
    int total = 0;
    for (const auto& p : primes_) total += p.n;
    if (total != n_) throw DomainError("local degrees do not add up to the field degree");
  }

  Lifted build_lifted(long precision) const {
    Lifted lf{precision, Trunc(v_.adic(), precision), {}, {}, {}, {}};
    for (int j = 0; j < n_; ++j) {
      RMat m;
      for (const auto& row : mult_exact_[j]) m.push_back(to_r(lf, row));
      lf.mult.push_back(std::move(m));
    }
    for (const auto& p : primes_by_original()) {
      const R two = lf.ring.adic.one() + lf.ring.adic.one(), three = two + lf.ring.adic.one();
      RVec e;
      for (const auto& x : p->idempotent) e.push_back(lf.ring.adic.from_residue(x));
      for (int it = 0;; ++it) {
        RMat me = combine(lf, e);
        RVec e2 = lf.ring.vmul(e, me);
        if (e2 == e) break;
        if (it > 80) throw DomainError("idempotent lifting did not converge");
        RVec e3 = lf.ring.vmul(e2, me);
        for (int k = 0; k < n_; ++k) e[k] = lf.ring.red(three * e2[k] - two * e3[k]);
      }
      RMat me = combine(lf, e);
      auto [basis, piv] = lf.ring.unit_echelon(me, p->n);
      lf.idempotent.push_back(std::move(e));
      lf.summand_basis.push_back(std::move(basis));
      lf.pivots.push_back(std::move(piv));
    }
    return lf;
  }

  std::vector<const Prime*> primes_by_original() const {
    std::vector<const Prime*> out(primes_.size());
    for (const auto& p : primes_) out[p.original_index] = &p;
    return out;
  }

  void finish_primes() {
    auto lf = lifted();
    const auto& adic = v_.adic();
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      Prime& p = primes_[i];
      RVec phi = local_factor(i, *lf);
      std::vector<GF> rc;
      for (const auto& c : phi) rc.push_back(adic.to_residue(c));
      p.residue_factor = GFPoly(alg_.zero, std::move(rc));
      auto gv = value(i, theta_);
      p.generator_value = gv.is_infinite() ? Rational(0) : gv.value();  // theta = 0 only in F[X]/(X)
      Rational best;
      std::size_t arg = 0;
      for (std::size_t b = 0; b < p.basis.size(); ++b) {
        auto val = value(i, E::from_coords(L_, p.basis[b]));
        if (val.is_infinite()) continue;
        if (b == 0 || val.value() < best) {
          best = val.value();
          arg = b;
        }
      }
      if (best.get_num() != 1 || sgn(best) <= 0) throw DomainError("prime ideal without a value 1/e element");
      p.e = static_cast<int>(best.get_den().get_si());
      // uniformizer: b0 E + (1 - E), E an integral lift of the idempotent mod pi^2
      R mod2 = adic.pi_pow(2);
      Vec<F> ec;
      for (const auto& x : lf->idempotent[p.original_index]) ec.push_back(adic.to_field(adic.reduce(x, mod2)));
      E big_e = E::from_coords(L_, vec_mul(ec, w_));
      E b0 = E::from_coords(L_, p.basis[arg]);
      E one = one_like(theta_);
      p.uniformizer = b0 * big_e + (one - big_e);
    }
    for (std::size_t i = 0; i < primes_.size(); ++i)
      for (std::size_t j = 0; j < primes_.size(); ++j) {
        auto val = value(j, primes_[i].uniformizer);
        Rational want = i == j ? make_rational(1, primes_[i].e) : Rational(0);
        if (val.is_infinite() || val.value() != want) throw DomainError("uniformizer construction failed");
      }
    // digits of the local factors for the final tie-break
    std::vector<std::vector<std::vector<GF>>> digits(primes_.size());
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      RVec phi = local_factor(i, *lf);
      for (std::size_t c = phi.size(); c-- > 0;) {
        std::vector<GF> d;
        R r = phi[c];
        for (long k = 0; k < lf->precision; ++k) {
          R low = adic.reduce(r, adic.pi());
          d.push_back(adic.to_residue(low));
          r = (r - low) / adic.pi();
        }
        digits[i].push_back(std::move(d));
      }
    }
    std::vector<std::size_t> order(primes_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) {
      const Prime& pa = primes_[a];
      const Prime& pb = primes_[b];
      // Newton slope of the local factor is -v(theta)
      if (pa.generator_value != pb.generator_value) return pa.generator_value > pb.generator_value;
      if (gfpoly_less(pa.residue_factor, pb.residue_factor)) return true;
      if (gfpoly_less(pb.residue_factor, pa.residue_factor)) return false;
      return digits[a] < digits[b];
    });
    std::vector<Prime> sorted;
    for (auto i : order) sorted.push_back(primes_[i]);
    primes_ = std::move(sorted);
  }

  Val v_;
  FieldPtr<F> L_;
  int n_ = 0;
  long scale_k_ = 0;
  long disc_order_ = 0;
  E theta_;
  Poly<F> g_;
  Matrix<F> w_, winv_;
  std::vector<E> omega_;
  std::vector<Matrix<F>> mult_exact_;  // mult_exact_[j][k] = O-coordinates of omega_j omega_k
  ResidueAlgebra alg_;
  Matrix<GF> radical_;
  std::vector<Prime> primes_;
  std::size_t round2_iters_ = 0;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const Lifted> lifted_;
};

}  // namespace valext
