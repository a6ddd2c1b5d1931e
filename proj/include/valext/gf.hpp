#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>

#include "valext/fp_poly.hpp"
#include "valext/rational.hpp"

namespace valext {

/// F_q = F_p[a]/(m(a)) with m monic irreducible of degree d <= GF::kMaxDegree.
struct GFContext {
  std::uint64_t p;
  FpPoly modulus;
  int degree;
  Integer order;  // q = p^d

  GFContext(std::uint64_t prime, FpPoly m);
  static std::shared_ptr<const GFContext> prime_field(std::uint64_t p);
  static std::shared_ptr<const GFContext> extension(FpPoly m);
};

using GFContextPtr = std::shared_ptr<const GFContext>;

class GF {
 public:
  static constexpr int kMaxDegree = 16;

  GF() = default;
  explicit GF(GFContextPtr ctx) : ctx_(std::move(ctx)) { c_.fill(0); }
  GF(GFContextPtr ctx, std::uint64_t value);
  static GF from_poly(GFContextPtr ctx, const FpPoly& a);
  /// The element with base-p digit vector given by `index` (enumeration order).
  static GF from_index(GFContextPtr ctx, std::uint64_t index);
  /// The generator a of F_p[a]/(m).
  static GF generator(GFContextPtr ctx);
  static GF random(GFContextPtr ctx, std::mt19937_64& rng);

  const GFContextPtr& context() const { return ctx_; }
  std::uint64_t prime() const { return ctx_->p; }
  int degree() const { return ctx_->degree; }
  std::uint64_t coeff(int i) const { return c_[i]; }
  FpPoly to_poly() const;

  bool is_zero() const;
  bool is_one() const;
  GF operator+(const GF& o) const;
  GF operator-(const GF& o) const;
  GF operator-() const;
  GF operator*(const GF& o) const;
  GF operator/(const GF& o) const { return *this * o.inverse(); }
  GF& operator+=(const GF& o) { return *this = *this + o; }
  GF& operator-=(const GF& o) { return *this = *this - o; }
  GF& operator*=(const GF& o) { return *this = *this * o; }
  GF& operator/=(const GF& o) { return *this = *this / o; }
  GF inverse() const;
  GF pow(Integer e) const;
  bool operator==(const GF& o) const { return c_ == o.c_; }
  bool operator!=(const GF& o) const { return c_ != o.c_; }
  bool operator<(const GF& o) const;

  std::string to_string() const;

 private:
  GFContextPtr ctx_;
  std::array<std::uint64_t, kMaxDegree> c_{};
};

inline GF zero_like(const GF& a) { return GF(a.context()); }
inline GF one_like(const GF& a) { return GF(a.context(), 1); }
inline GF int_like(const GF& a, long n) {
  return GF(a.context(), modp::reduce(n, a.prime()));
}
inline bool is_zero(const GF& a) { return a.is_zero(); }
inline bool is_one(const GF& a) { return a.is_one(); }
inline GF inv(const GF& a) { return a.inverse(); }
inline std::uint64_t characteristic(const GF& a) { return a.prime(); }
inline std::string to_string(const GF& a) { return a.to_string(); }

}  // namespace valext
