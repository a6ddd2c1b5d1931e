#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace valext {

/// Arithmetic in Z/p for a prime p < 2^32.
namespace modp {
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
inline std::uint64_t reduce(long long a, std::uint64_t p) {
  long long r = a % static_cast<long long>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
}
}  // namespace modp

/// Dense univariate polynomial over F_p, ascending coefficients, no trailing
/// zeros. Used for F_p[t] (rational function field numerators/denominators)
/// and as the representation of F_q = F_p[y]/(m).
class FpPoly {
 public:
  explicit FpPoly(std::uint64_t p = 2) : p_(p) {}
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static FpPoly constant(std::uint64_t p, std::uint64_t c);
  static FpPoly monomial(std::uint64_t p, std::uint64_t c, int k);
  /// x - c
  static FpPoly linear(std::uint64_t p, std::uint64_t c);

  std::uint64_t prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::uint64_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  std::uint64_t lc() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator-() const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(std::uint64_t s) const;
  FpPoly shifted(int k) const;  // multiply by x^k
  FpPoly& operator+=(const FpPoly& o) { return *this = *this + o; }
  FpPoly& operator-=(const FpPoly& o) { return *this = *this - o; }
  FpPoly& operator*=(const FpPoly& o) { return *this = *this * o; }

  /// Euclidean division; divisor nonzero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
  FpPoly operator/(const FpPoly& d) const { return divmod(d).first; }
  FpPoly operator%(const FpPoly& d) const { return divmod(d).second; }

  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const FpPoly& o) const { return !(*this == o); }
  /// Degree first, then coefficients from the top down.
  bool operator<(const FpPoly& o) const;

  FpPoly monic() const;
  FpPoly derivative() const;
  std::uint64_t eval(std::uint64_t x) const;
  /// Truncation to the first k coefficients (mod x^k).
  FpPoly truncated(int k) const;
  /// Coefficient reversal with respect to degree bound d: x^d f(1/x).
  FpPoly reversed(int d) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);
/// Returns g = gcd(a, b) monic with s*a + t*b = g.
FpPoly xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t);
FpPoly pow_mod(FpPoly base, std::uint64_t e, const FpPoly& m);
FpPoly pow(const FpPoly& base, unsigned e);
/// Inverse of a modulo m; a must be coprime to m.
FpPoly inv_mod(const FpPoly& a, const FpPoly& m);
/// Rabin's irreducibility test over F_p.
bool is_irreducible(const FpPoly& f);
/// All monic irreducible polynomials of the given degree in increasing
/// lexicographic order, stopping after `limit`.
std::vector<FpPoly> monic_irreducibles(std::uint64_t p, int degree, std::size_t limit);
/// Multiplicity of the irreducible pi in a (a nonzero).
int order_at(FpPoly a, const FpPoly& pi);

}  // namespace valext
