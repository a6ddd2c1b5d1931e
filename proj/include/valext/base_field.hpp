#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "valext/function_factor.hpp"
#include "valext/rational_factor.hpp"

namespace valext {

/// Per-base operations used by the generic algorithms: factorization, a
/// deterministic sequence of distinct nonzero scalars, random sampling.
template <class F>
struct BaseField;

template <>
struct BaseField<Rational> {
  using Elem = Rational;
  Rational zero() const { return 0; }
  std::string name() const { return "Q"; }
  std::uint64_t characteristic() const { return 0; }
  std::vector<std::pair<QPoly, int>> factor(const QPoly& f) const { return factor_rational(f); }
  bool is_irreducible(const QPoly& f) const { return is_irreducible_rational(f); }
  /// k-th element of 1, 2, 3, ...
  Rational scalar(std::size_t k) const { return Rational(static_cast<long>(k + 1)); }
  Rational random(std::mt19937_64& rng, int size = 5) const {
    std::uniform_int_distribution<long> num(-size, size), den(1, size);
    return make_rational(num(rng), den(rng));
  }
  bool operator==(const BaseField&) const { return true; }
};

template <>
struct BaseField<RatFunc> {
  using Elem = RatFunc;
  std::uint64_t p = 2;

  BaseField() = default;
  explicit BaseField(std::uint64_t prime) : p(prime) {}
  RatFunc zero() const { return RatFunc(p); }
  std::string name() const { return "Fp(" + std::to_string(p) + ",t)"; }
  std::uint64_t characteristic() const { return p; }
  std::vector<std::pair<FPoly, int>> factor(const FPoly& f) const { return factor_function_field(f); }
  bool is_irreducible(const FPoly& f) const { return is_irreducible_function_field(f); }
  /// k-th element of 1, ..., p-1, t, t+1, ..., t^2, ...: the nonzero
  /// polynomials in base-p digit order.
  RatFunc scalar(std::size_t k) const {
    std::vector<std::uint64_t> c;
    for (std::size_t n = k + 1; n; n /= p) c.push_back(n % p);
    return RatFunc(FpPoly(p, std::move(c)));
  }
  RatFunc random(std::mt19937_64& rng, int size = 3) const {
    std::uniform_int_distribution<std::uint64_t> digit(0, p - 1);
    std::uniform_int_distribution<int> deg(0, size);
    auto poly = [&](bool nonzero) {
      for (;;) {
        std::vector<std::uint64_t> c(deg(rng) + 1);
        for (auto& x : c) x = digit(rng);
        FpPoly r(p, std::move(c));
        if (!nonzero || !r.is_zero()) return r;
      }
    };
    return RatFunc(poly(false), poly(true));
  }
  bool operator==(const BaseField& o) const { return p == o.p; }
};

template <class F>
BaseField<F> base_of(const F& proto);

template <>
inline BaseField<Rational> base_of(const Rational&) {
  return {};
}
template <>
inline BaseField<RatFunc> base_of(const RatFunc& proto) {
  return BaseField<RatFunc>(proto.prime());
}

}  // namespace valext
