#pragma once

#include <optional>
#include <vector>

#include "valext/poly.hpp"

namespace valext {

template <class F>
using Vec = std::vector<F>;
template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
Matrix<F> zero_matrix(const F& proto, std::size_t rows, std::size_t cols) {
  return Matrix<F>(rows, Vec<F>(cols, zero_like(proto)));
}

template <class F>
Matrix<F> identity_matrix(const F& proto, std::size_t n) {
  Matrix<F> m = zero_matrix(proto, n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = one_like(proto);
  return m;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& a) {
  if (a.empty()) return a;
  Matrix<F> t(a[0].size(), Vec<F>(a.size(), a[0][0]));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

template <class F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  const F z = zero_like(b[0][0]);
  Matrix<F> c(n, Vec<F>(m, z));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (detail::scalar_is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!detail::scalar_is_zero(b[l][j])) c[i][j] = c[i][j] + a[i][l] * b[l][j];
    }
  return c;
}

/// Row vector times matrix.
template <class F>
Vec<F> vec_mul(const Vec<F>& v, const Matrix<F>& b) {
  std::size_t m = b.empty() ? 0 : b[0].size();
  Vec<F> r(m, zero_like(b[0][0]));
  for (std::size_t l = 0; l < v.size(); ++l) {
    if (detail::scalar_is_zero(v[l])) continue;
    for (std::size_t j = 0; j < m; ++j)
      if (!detail::scalar_is_zero(b[l][j])) r[j] = r[j] + v[l] * b[l][j];
  }
  return r;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!detail::scalar_is_zero(a[i][c])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    F li = inv(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * li;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || detail::scalar_is_zero(a[i][c])) continue;
      F f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!detail::scalar_is_zero(a[r][j])) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> a) {
  return rref(a).size();
}

/// Basis of {x : A x = 0} (column convention, A is m x n).
template <class F>
Matrix<F> nullspace(Matrix<F> a, std::size_t n, const F& proto) {
  if (a.empty()) return identity_matrix(proto, n);
  const F z = zero_like(proto);
  auto piv = rref(a);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  Matrix<F> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    Vec<F> v(n, z);
    v[free] = one_like(z);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solve x A = b for a row vector x (A is m x n, b has length n).
template <class F>
std::optional<Vec<F>> solve_left(const Matrix<F>& a, const Vec<F>& b) {
  // x A = b  <=>  A^T x^T = b^T
  std::size_t m = a.size(), n = b.size();
  const F z = zero_like(b[0]);
  Matrix<F> aug(n, Vec<F>(m + 1, z));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) aug[j][i] = a[i][j];
  for (std::size_t j = 0; j < n; ++j) aug[j][m] = b[j];
  auto piv = rref(aug);
  Vec<F> x(m, z);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == m) return std::nullopt;
    x[piv[r]] = aug[r][m];
  }
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  std::size_t n = a.size();
  const F z = zero_like(a[0][0]);
  Matrix<F> aug(n, Vec<F>(2 * n, z));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = one_like(z);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<F> r(n, Vec<F>(n, z));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = aug[i][n + j];
  return r;
}

template <class F>
F determinant(Matrix<F> a) {
  std::size_t n = a.size();
  F d = one_like(a[0][0]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!detail::scalar_is_zero(a[i][c])) {
        piv = i;
        break;
      }
    if (piv == n) return zero_like(d);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d = d * a[c][c];
    F li = inv(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (detail::scalar_is_zero(a[i][c])) continue;
      F f = a[i][c] * li;
      for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  return d;
}

/// Linear subspace of F^n kept in reduced echelon form.
template <class F>
class Subspace {
 public:
  Subspace(const F& proto, std::size_t n) : proto_(zero_like(proto)), n_(n) {}
  Subspace(const F& proto, std::size_t n, const Matrix<F>& gens) : Subspace(proto, n) {
    for (const auto& g : gens) add(g);
  }

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const Matrix<F>& basis() const { return rows_; }

  /// Reduce v against the basis; the remainder is zero iff v is in the span.
  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const F& c = v[pivots_[r]];
      if (detail::scalar_is_zero(c)) continue;
      F f = c;
      for (std::size_t j = 0; j < n_; ++j)
        if (!detail::scalar_is_zero(rows_[r][j])) v[j] = v[j] - f * rows_[r][j];
    }
    return v;
  }
  bool contains(const Vec<F>& v) const {
    Vec<F> w = reduce(v);
    for (const auto& x : w)
      if (!detail::scalar_is_zero(x)) return false;
    return true;
  }
  /// Returns true if v enlarged the space.
  bool add(const Vec<F>& v) {
    Vec<F> w = reduce(v);
    std::size_t piv = n_;
    for (std::size_t j = 0; j < n_; ++j)
      if (!detail::scalar_is_zero(w[j])) {
        piv = j;
        break;
      }
    if (piv == n_) return false;
    F li = inv(w[piv]);
    for (auto& x : w) x = x * li;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      F f = rows_[r][piv];
      if (detail::scalar_is_zero(f)) continue;
      for (std::size_t j = 0; j < n_; ++j) rows_[r][j] = rows_[r][j] - f * w[j];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    return true;
  }

 private:
  F proto_;
  std::size_t n_;
  Matrix<F> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace valext
