#pragma once

#include <cstdint>
#include <string>

#include "valext/fp_poly.hpp"

namespace valext {

/// Element of F_p(t), kept as num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  explicit RatFunc(std::uint64_t p = 2) : num_(p), den_(FpPoly::constant(p, 1)) {}
  explicit RatFunc(FpPoly num);
  RatFunc(FpPoly num, FpPoly den);
  static RatFunc constant(std::uint64_t p, long c);
  static RatFunc t(std::uint64_t p) { return RatFunc(FpPoly::monomial(p, 1, 1)); }

  std::uint64_t prime() const { return num_.prime(); }
  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc inverse() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator<(const RatFunc& o) const {
    return num_ < o.num_ || (num_ == o.num_ && den_ < o.den_);
  }

  std::string to_string() const;

 private:
  RatFunc(FpPoly num, FpPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  FpPoly num_, den_;
};

inline RatFunc zero_like(const RatFunc& a) { return RatFunc(a.prime()); }
inline RatFunc one_like(const RatFunc& a) { return RatFunc::constant(a.prime(), 1); }
inline RatFunc int_like(const RatFunc& a, long n) { return RatFunc::constant(a.prime(), n); }
inline bool is_zero(const RatFunc& a) { return a.is_zero(); }
inline bool is_one(const RatFunc& a) { return a.is_one(); }
inline RatFunc inv(const RatFunc& a) { return a.inverse(); }
inline std::uint64_t characteristic(const RatFunc& a) { return a.prime(); }
inline std::string to_string(const RatFunc& a) { return a.to_string(); }

}  // namespace valext
