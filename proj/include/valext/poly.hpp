#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "valext/errors.hpp"
#include "valext/rational.hpp"

namespace valext {

/// Dense univariate polynomial over a field F, ascending coefficients,
/// trailing zeros stripped. `proto_` is a zero of F, kept so that fields with
/// runtime parameters (F_q, F_p(t), number fields) can build constants.
namespace detail {
template <class T>
bool scalar_is_zero(const T& a) {
  return is_zero(a);
}
template <class T>
bool scalar_is_one(const T& a) {
  return is_one(a);
}
template <class T>
std::string scalar_to_string(const T& a) {
  return to_string(a);
}
}  // namespace detail

template <class F>
class Poly {
 public:
  using Scalar = F;

  Poly() = default;
  explicit Poly(const F& proto) : proto_(zero_like(proto)) {}
  Poly(const F& proto, std::vector<F> coeffs) : proto_(zero_like(proto)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& c) { return Poly(c, {c}); }
  static Poly monomial(const F& c, int k) {
    std::vector<F> v(k + 1, zero_like(c));
    v[k] = c;
    return Poly(c, std::move(v));
  }
  static Poly x(const F& proto) { return monomial(one_like(proto), 1); }
  /// x - a
  static Poly linear(const F& a) { return Poly(a, {-a, one_like(a)}); }

  const F& proto() const { return proto_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && detail::scalar_is_one(c_.back()); }
  const F& coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : proto_;
  }
  const F& lc() const { return c_.empty() ? proto_ : c_.back(); }
  const std::vector<F>& coeffs() const { return c_; }
  void set_coeff(int i, const F& v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, proto_);
    c_[i] = v;
    trim();
  }

  Poly operator+(const Poly& o) const {
    std::vector<F> r(std::max(c_.size(), o.c_.size()), proto_);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i < c_.size()) r[i] = c_[i];
      if (i < o.c_.size()) r[i] = r[i] + o.c_[i];
    }
    return Poly(proto_, std::move(r));
  }
  Poly operator-(const Poly& o) const {
    std::vector<F> r(std::max(c_.size(), o.c_.size()), proto_);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i < c_.size()) r[i] = c_[i];
      if (i < o.c_.size()) r[i] = r[i] - o.c_[i];
    }
    return Poly(proto_, std::move(r));
  }
  Poly operator-() const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(-a);
    return Poly(proto_, std::move(r));
  }
  Poly operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly(proto_);
    std::vector<F> r(c_.size() + o.c_.size() - 1, proto_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (detail::scalar_is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(proto_, std::move(r));
  }
  Poly scaled(const F& s) const {
    if (detail::scalar_is_zero(s)) return Poly(proto_);
    std::vector<F> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(a * s);
    return Poly(proto_, std::move(r));
  }
  Poly shifted(int k) const {
    if (c_.empty()) return *this;
    std::vector<F> r(k, proto_);
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(proto_, std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(proto_), *this};
    std::vector<F> r = c_;
    int dd = d.degree();
    std::vector<F> q(degree() - dd + 1, proto_);
    F li = inv(d.lc());
    bool monic_divisor = detail::scalar_is_one(d.lc());
    for (int i = degree(); i >= dd; --i) {
      if (detail::scalar_is_zero(r[i])) continue;
      F c = monic_divisor ? r[i] : r[i] * li;
      for (int j = 0; j < dd; ++j)
        if (!detail::scalar_is_zero(d.c_[j])) r[i - dd + j] = r[i - dd + j] - c * d.c_[j];
      r[i] = proto_;
      q[i - dd] = std::move(c);
    }
    r.resize(dd, proto_);
    return {Poly(proto_, std::move(q)), Poly(proto_, std::move(r))};
  }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(c_ == o.c_); }

  Poly monic() const {
    if (c_.empty() || detail::scalar_is_one(c_.back())) return *this;
    return scaled(inv(c_.back()));
  }
  Poly derivative() const {
    if (c_.size() <= 1) return Poly(proto_);
    std::vector<F> r(c_.size() - 1, proto_);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * int_like(proto_, static_cast<long>(i));
    return Poly(proto_, std::move(r));
  }
  F eval(const F& x) const {
    F r = proto_;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
  }
  /// this(g(x)).
  Poly compose(const Poly& g) const {
    Poly r(proto_);
    for (int i = degree(); i >= 0; --i) r = r * g + constant(c_[i]);
    return r;
  }
  /// Coefficient-wise image under a map to another field.
  template <class G, class Fn>
  Poly<G> map(const G& proto, Fn&& fn) const {
    std::vector<G> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(fn(a));
    return Poly<G>(proto, std::move(r));
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
  }
  F proto_;
  std::vector<F> c_;
};

template <class F>
std::string Poly<F>::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const F& a = c_[i];
    if (detail::scalar_is_zero(a)) continue;
    std::string mon = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if constexpr (std::is_same_v<F, Rational>) {
      bool neg = sgn(a) < 0;
      Rational m = abs(a);
      std::string coef = m == 1 && i > 0 ? "" : m.get_str();
      std::string term = coef.empty() ? mon : (mon.empty() ? coef : coef + "*" + mon);
      if (s.empty())
        s = (neg ? "-" : "") + term;
      else
        s += (neg ? " - " : " + ") + term;
    } else {
      std::string coef = detail::scalar_to_string(a);
      bool unit = detail::scalar_is_one(a);
      std::string term = unit && i > 0 ? mon : (mon.empty() ? coef : coef + "*" + mon);
      s += (s.empty() ? "" : " + ") + term;
    }
  }
  return s;
}

template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// g = gcd(a, b) monic, s*a + t*b = g.
template <class F>
Poly<F> xgcd(const Poly<F>& a, const Poly<F>& b, Poly<F>& s, Poly<F>& t) {
  const F& z = a.proto();
  Poly<F> r0 = a, r1 = b, s0 = Poly<F>::constant(one_like(z)), s1(z), t0(z), t1 = Poly<F>::constant(one_like(z));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> ns = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(ns);
    Poly<F> nt = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  F li = inv(r0.lc());
  s = s0.scaled(li);
  t = t0.scaled(li);
  return r0.scaled(li);
}

template <class F>
Poly<F> inv_mod(const Poly<F>& a, const Poly<F>& m) {
  Poly<F> s(a.proto()), t(a.proto());
  Poly<F> g = xgcd(a % m, m, s, t);
  if (g.degree() != 0) throw DomainError("polynomial not invertible modulo " + m.to_string());
  return s % m;
}

template <class F>
Poly<F> pow_mod(Poly<F> base, Integer e, const Poly<F>& m) {
  Poly<F> r = Poly<F>::constant(one_like(base.proto())) % m;
  base = base % m;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return r;
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base) % m;
    if (i + 1 < bits) base = (base * base) % m;
  }
  return r;
}

template <class F>
Poly<F> pow(const Poly<F>& base, unsigned e) {
  Poly<F> r = Poly<F>::constant(one_like(base.proto()));
  Poly<F> b = base;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

/// Resultant over a field by the Euclidean remainder sequence.
template <class F>
F resultant(Poly<F> a, Poly<F> b) {
  const F z = a.proto();
  if (a.is_zero() || b.is_zero()) return z;
  F res = one_like(z);
  while (b.degree() > 0) {
    int da = a.degree(), db = b.degree();
    Poly<F> r = a % b;
    if (r.is_zero()) return z;
    int dr = r.degree();
    // res(a, b) = (-1)^(da*db) lc(b)^(da - dr) res(b, r)
    F l = b.lc();
    for (int i = 0; i < da - dr; ++i) res = res * l;
    if ((da * db) % 2 == 1) res = -res;
    a = std::move(b);
    b = std::move(r);
  }
  // b constant
  F l = b.lc();
  for (int i = 0; i < a.degree(); ++i) res = res * l;
  return res;
}

/// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f).
template <class F>
F discriminant(const Poly<F>& f) {
  int n = f.degree();
  F r = resultant(f, f.derivative()) / f.lc();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

template <class F>
bool is_separable(const Poly<F>& f) {
  return f.degree() >= 0 && gcd(f, f.derivative()).degree() == 0;
}

}  // namespace valext
