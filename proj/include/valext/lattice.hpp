#pragma once

#include <vector>

#include "valext/linalg.hpp"
#include "valext/valuation.hpp"

namespace valext {

/// Hermite normal form over the valuation ring O_v of rows spanning a lattice
/// of full rank n: upper triangular, pivots pi^k, entries above a pivot
/// reduced to canonical representatives modulo it. Equal lattices give
/// identical output.
template <class F>
Matrix<F> dvr_hnf(Matrix<F> rows, const DiscreteValuation<F>& v, std::size_t n) {
  const F z = v.proto();
  const auto& adic = v.adic();
  std::vector<long> pivot_val;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = rows.size();
    long bv = 0;
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (is_zero(rows[i][c])) continue;
      long o = v.order(rows[i][c]);
      if (best == rows.size() || o < bv) {
        best = i;
        bv = o;
      }
    }
    if (best == rows.size()) throw DomainError("lattice is not of full rank");
    std::swap(rows[r], rows[best]);
    // normalize pivot to pi^bv
    F target = bv >= 0 ? adic.to_field(adic.pi_pow(bv)) : one_like(z) / adic.to_field(adic.pi_pow(-bv));
    F scale = target / rows[r][c];
    if (!is_one(scale))
      for (auto& x : rows[r]) x = x * scale;
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (is_zero(rows[i][c])) continue;
      F q = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < n; ++k) rows[i][k] = rows[i][k] - q * rows[r][k];
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (is_zero(rows[i][c])) continue;
      F rep = reduce_mod_power(v, rows[i][c], bv);
      F q = (rows[i][c] - rep) / rows[r][c];
      if (is_zero(q)) continue;
      for (std::size_t k = c; k < n; ++k) rows[i][k] = rows[i][k] - q * rows[r][k];
    }
    ++r;
    pivot_val.push_back(bv);
  }
  rows.resize(n);
  return rows;
}

/// Coordinates of x with respect to the basis whose inverse matrix is winv.
template <class F>
Vec<F> lattice_coords(const Vec<F>& x, const Matrix<F>& winv) {
  return vec_mul(x, winv);
}

template <class F>
bool is_integral_vector(const Vec<F>& c, const DiscreteValuation<F>& v) {
  for (const auto& a : c)
    if (!is_zero(a) && v.order(a) < 0) return false;
  return true;
}

template <class F>
long min_order(const Vec<F>& c, const DiscreteValuation<F>& v) {
  long m = DiscreteValuation<F>::kInfinite;
  for (const auto& a : c)
    if (!is_zero(a)) m = std::min(m, v.order(a));
  return m;
}

}  // namespace valext
