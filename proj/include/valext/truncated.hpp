#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "valext/errors.hpp"

namespace valext {

/// Linear algebra over O_v / pi^N, with elements of the adic ring R reduced
/// modulo `m` = pi^N.
template <class Adic>
struct TruncatedRing {
  using R = typename Adic::R;
  using RVec = std::vector<R>;
  using RMat = std::vector<RVec>;

  Adic adic;
  long precision;
  R m;

  TruncatedRing(Adic a, long n) : adic(std::move(a)), precision(n), m(adic.pi_pow(n)) {}

  R red(const R& a) const { return adic.reduce(a, m); }
  long order(const R& a) const {
    R r = red(a);
    long o = adic.order(r);
    return o >= precision ? Adic::kInfinite : o;
  }
  bool is_zero(const R& a) const { return order(a) >= Adic::kInfinite; }

  RMat mul(const RMat& a, const RMat& b) const {
    const std::size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    RMat r(n, RVec(c, adic.zero()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < k; ++l) {
        if (a[i][l] == adic.zero()) continue;
        for (std::size_t j = 0; j < c; ++j) r[i][j] += a[i][l] * b[l][j];
      }
    for (auto& row : r)
      for (auto& x : row) x = red(x);
    return r;
  }
  RVec vmul(const RVec& v, const RMat& b) const {
    const std::size_t c = b.empty() ? 0 : b[0].size();
    RVec r(c, adic.zero());
    for (std::size_t l = 0; l < v.size(); ++l) {
      if (v[l] == adic.zero()) continue;
      for (std::size_t j = 0; j < c; ++j) r[j] += v[l] * b[l][j];
    }
    for (auto& x : r) x = red(x);
    return r;
  }

  /// Determinant modulo pi^N by full pivoting on minimal valuation; nullopt
  /// when it vanishes to the working precision.
  std::optional<R> det(RMat a) const {
    const std::size_t n = a.size();
    R d = adic.one();
    bool neg = false;
    for (auto& row : a)
      for (auto& x : row) x = red(x);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t bi = k, bj = k;
      long bv = Adic::kInfinite;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j) {
          long o = order(a[i][j]);
          if (o < bv) {
            bv = o;
            bi = i;
            bj = j;
          }
        }
      if (bv >= Adic::kInfinite) return std::nullopt;
      if (bi != k) {
        std::swap(a[bi], a[k]);
        neg = !neg;
      }
      if (bj != k) {
        for (auto& row : a) std::swap(row[bj], row[k]);
        neg = !neg;
      }
      R piv = adic.pi_pow(bv);
      R uinv = adic.unit_inverse(red(a[k][k] / piv), m);
      for (std::size_t i = k + 1; i < n; ++i) {
        if (is_zero(a[i][k])) continue;
        R q = red((a[i][k] / piv) * uinv);
        for (std::size_t l = k + 1; l < n; ++l) a[i][l] = red(a[i][l] - q * a[k][l]);
      }
      d = red(d * a[k][k]);
      if (is_zero(d)) return std::nullopt;
    }
    if (neg) d = red(adic.zero() - d);
    return d;
  }

  /// Characteristic polynomial det(xI - A), coefficients lowest degree first
  /// (division-free Berkowitz recursion).
  RVec charpoly(const RMat& a) const {
    RVec top = berkowitz(a);  // highest degree first
    return RVec(top.rbegin(), top.rend());
  }

  /// Basis of a free direct summand (given by spanning rows) in reduced
  /// echelon form with unit pivots; returns the rows and pivot columns.
  std::pair<RMat, std::vector<std::size_t>> unit_echelon(RMat rows, std::size_t rank) const {
    std::vector<std::size_t> piv;
    RMat basis;
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < n && basis.size() < rank; ++c) {
      std::size_t found = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (order(rows[i][c]) == 0) {
          found = i;
          break;
        }
      if (found == rows.size()) continue;
      RVec p = rows[found];
      rows.erase(rows.begin() + static_cast<long>(found));
      R uinv = adic.unit_inverse(red(p[c]), m);
      for (auto& x : p) x = red(x * uinv);
      auto eliminate = [&](RVec& row) {
        if (is_zero(row[c])) return;
        R q = red(row[c]);
        for (std::size_t k = 0; k < n; ++k) row[k] = red(row[k] - q * p[k]);
      };
      for (auto& row : rows) eliminate(row);
      for (auto& row : basis) eliminate(row);
      basis.push_back(std::move(p));
      piv.push_back(c);
    }
    if (basis.size() != rank) throw PrecisionError("summand basis lost rank at working precision", static_cast<int>(2 * precision));
    return {basis, piv};
  }

 private:
  RVec berkowitz(const RMat& a) const {
    const std::size_t n = a.size();
    if (n == 0) return {adic.one()};
    if (n == 1) return {adic.one(), red(adic.zero() - a[0][0])};
    RMat sub(n - 1, RVec(n - 1, adic.zero()));
    RVec col(n - 1, adic.zero()), row(n - 1, adic.zero());
    for (std::size_t i = 1; i < n; ++i) {
      col[i - 1] = a[i][0];
      row[i - 1] = a[0][i];
      for (std::size_t j = 1; j < n; ++j) sub[i - 1][j - 1] = a[i][j];
    }
    // diags: 1, -a00, -R C, -R A C, -R A^2 C, ...
    RVec diags{adic.one(), red(adic.zero() - a[0][0])};
    RVec cur = col;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      R s = adic.zero();
      for (std::size_t i = 0; i < n - 1; ++i) s += row[i] * cur[i];
      diags.push_back(red(adic.zero() - s));
      if (k + 2 < n) {
        RVec nxt(n - 1, adic.zero());
        for (std::size_t i = 0; i < n - 1; ++i) {
          for (std::size_t j = 0; j < n - 1; ++j) nxt[i] += sub[i][j] * cur[j];
          nxt[i] = red(nxt[i]);
        }
        cur = std::move(nxt);
      }
    }
    RVec inner = berkowitz(sub);  // length n
    RVec out(n + 1, adic.zero());
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j < n && j <= i; ++j) out[i] += diags[i - j] * inner[j];
      out[i] = red(out[i]);
    }
    return out;
  }
};

}  // namespace valext
