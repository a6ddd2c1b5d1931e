#pragma once

#include <algorithm>
#include <vector>

#include "valext/finite_factor.hpp"
#include "valext/linalg.hpp"

namespace valext {

/// A finite commutative algebra over F_q given by structure constants:
/// basis[i] * basis[j] = sum_k c[i][j][k] basis[k].
struct ResidueAlgebra {
  GF zero;
  std::size_t n = 0;
  std::vector<std::vector<Vec<GF>>> c;
  Vec<GF> one;

  Vec<GF> mul(const Vec<GF>& a, const Vec<GF>& b) const {
    Vec<GF> r(n, zero);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j].is_zero()) continue;
        GF ab = a[i] * b[j];
        const auto& cij = c[i][j];
        for (std::size_t k = 0; k < n; ++k)
          if (!cij[k].is_zero()) r[k] += ab * cij[k];
      }
    }
    return r;
  }
  Vec<GF> add(const Vec<GF>& a, const Vec<GF>& b) const {
    Vec<GF> r(a);
    for (std::size_t i = 0; i < n; ++i) r[i] += b[i];
    return r;
  }
  Vec<GF> sub(const Vec<GF>& a, const Vec<GF>& b) const {
    Vec<GF> r(a);
    for (std::size_t i = 0; i < n; ++i) r[i] -= b[i];
    return r;
  }
  Vec<GF> scale(const Vec<GF>& a, const GF& s) const {
    Vec<GF> r(a);
    for (auto& x : r) x *= s;
    return r;
  }
  Vec<GF> pow(Vec<GF> a, Integer e) const {
    Vec<GF> r = one;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (sgn(e) == 0) return r;
    for (std::size_t i = 0; i < bits; ++i) {
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
      if (i + 1 < bits) a = mul(a, a);
    }
    return r;
  }
  Vec<GF> basis_vector(std::size_t i) const {
    Vec<GF> v(n, zero);
    v[i] = one_like(zero);
    return v;
  }
  /// Row i is the coordinate vector of basis_i^q.
  Matrix<GF> frobenius() const {
    const Integer q = zero.context()->order;
    Matrix<GF> m;
    for (std::size_t i = 0; i < n; ++i) m.push_back(pow(basis_vector(i), q));
    return m;
  }

  /// Nilradical: kernel of a power of Frobenius with q^j >= n.
  Matrix<GF> radical() const {
    Matrix<GF> fr = frobenius();
    Matrix<GF> p = fr;
    Integer qj = zero.context()->order;
    while (qj < Integer(static_cast<unsigned long>(n))) {
      p = mat_mul(p, fr);
      qj *= zero.context()->order;
    }
    return nullspace(transpose(p), n, zero);
  }

  /// {a : a^q - a in J}; contains J with dimension dim J + (number of primes).
  Matrix<GF> berlekamp(const Matrix<GF>& j) const {
    Matrix<GF> fr = frobenius();
    for (std::size_t i = 0; i < n; ++i) fr[i][i] -= one_like(zero);
    Matrix<GF> stacked = fr;
    for (const auto& row : j) stacked.push_back(row);
    Matrix<GF> ker = nullspace(transpose(stacked), stacked.size(), zero);
    Subspace<GF> s(zero, n);
    for (const auto& k : ker) s.add(Vec<GF>(k.begin(), k.begin() + static_cast<long>(n)));
    return s.basis();
  }

  Vec<GF> refine_idempotent(Vec<GF> e) const {
    for (int it = 0; it < 64; ++it) {
      Vec<GF> e2 = mul(e, e);
      if (e2 == e) return e;
      Vec<GF> e3 = mul(e2, e);
      e = sub(scale(e2, int_like(zero, 3)), scale(e3, int_like(zero, 2)));
    }
    throw DomainError("idempotent refinement did not converge");
  }

  /// Primitive idempotents, given the radical's basis.
  std::vector<Vec<GF>> primitive_idempotents(const Matrix<GF>& j) const {
    Matrix<GF> s = berlekamp(j);
    std::vector<Vec<GF>> idem{one};
    for (const auto& sv : s) {
      std::vector<Vec<GF>> next;
      for (const auto& e : idem) {
        Vec<GF> t = mul(e, sv);
        Subspace<GF> rad(zero, n, j);
        Vec<GF> ce = sub_one(e);
        for (std::size_t k = 0; k < n; ++k) rad.add(mul(ce, basis_vector(k)));
        // relation of t in eA modulo its radical
        std::vector<Vec<GF>> pw;
        Vec<GF> cur = e;
        Poly<GF> h(zero);
        Matrix<GF> rows;
        for (std::size_t d = 0; d <= n; ++d) {
          Vec<GF> red = rad.reduce(cur);
          if (!rows.empty()) {
            auto sol = solve_left(rows, red);
            if (sol) {
              std::vector<GF> hc(d + 1, zero);
              for (std::size_t i = 0; i < d; ++i) hc[i] = -(*sol)[i];
              hc[d] = one_like(zero);
              h = Poly<GF>(zero, hc);
              break;
            }
          } else if (std::all_of(red.begin(), red.end(), [](const GF& x) { return x.is_zero(); })) {
            h = Poly<GF>::constant(one_like(zero));
            break;
          }
          rows.push_back(red);
          cur = mul(cur, t);
        }
        if (h.degree() <= 1) {
          next.push_back(e);
          continue;
        }
        std::vector<GF> roots;
        for (const auto& [fac, m] : factor_finite(h)) {
          if (fac.degree() != 1) throw DomainError("Berlekamp element with non-split relation");
          roots.push_back(-fac.coeff(0));
        }
        for (std::size_t a = 0; a < roots.size(); ++a) {
          Vec<GF> el = e;
          for (std::size_t b = 0; b < roots.size(); ++b) {
            if (a == b) continue;
            Vec<GF> fct = scale(sub(t, scale(e, roots[b])), inv(roots[a] - roots[b]));
            el = mul(el, fct);
          }
          next.push_back(refine_idempotent(el));
        }
      }
      idem = std::move(next);
    }
    return idem;
  }

  Vec<GF> sub_one(const Vec<GF>& e) const { return sub(one, e); }

  std::size_t rank_of_products(const Vec<GF>& e, const Matrix<GF>& gens) const {
    Subspace<GF> s(zero, n);
    for (const auto& g : gens) s.add(mul(e, g));
    return s.dim();
  }
};

}  // namespace valext
