#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valext/errors.hpp"
#include "valext/gf.hpp"
#include "valext/hensel.hpp"
#include "valext/poly.hpp"
#include "valext/rat_func.hpp"

namespace valext {

/// A value in (1/e)Z ⊂ Q, or infinity (the value of 0).
class ValueGroupElement {
 public:
  ValueGroupElement() : inf_(true) {}
  explicit ValueGroupElement(Rational v) : v_(std::move(v)), inf_(false) {}
  static ValueGroupElement infinity() { return {}; }

  bool is_infinite() const { return inf_; }
  const Rational& value() const {
    if (inf_) throw DomainError("value of zero is infinite");
    return v_;
  }
  ValueGroupElement operator+(const ValueGroupElement& o) const {
    if (inf_ || o.inf_) return infinity();
    return ValueGroupElement(v_ + o.v_);
  }
  ValueGroupElement operator-() const {
    if (inf_) throw DomainError("negation of infinity");
    return ValueGroupElement(-v_);
  }
  bool operator==(const ValueGroupElement& o) const { return inf_ == o.inf_ && (inf_ || v_ == o.v_); }
  bool operator<(const ValueGroupElement& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const ValueGroupElement& o) const { return !(o < *this); }
  /// Smallest e with e * value integral.
  Integer denominator() const { return inf_ ? Integer(1) : Integer(v_.get_den()); }
  std::string to_string() const { return inf_ ? "inf" : v_.get_str(); }

 private:
  Rational v_;
  bool inf_;
};

template <class F>
class DiscreteValuation;

/// p-adic valuation on Q.
template <>
class DiscreteValuation<Rational> {
 public:
  using Field = Rational;
  using Adic = IntegerAdic;

  explicit DiscreteValuation(std::uint64_t p) : adic_(Integer(static_cast<unsigned long>(p))) {
    if (!is_probable_prime(adic_.p)) throw DomainError("p-adic valuation needs a prime");
  }
  static constexpr long kInfinite = IntegerAdic::kInfinite;

  Rational proto() const { return 0; }
  std::uint64_t residue_char() const { return adic_.p.get_ui(); }
  bool is_finite() const { return true; }
  const Adic& adic() const { return adic_; }
  const GFContextPtr& residue_field() const { return adic_.residue; }
  std::string descriptor() const { return "Q@" + adic_.p.get_str(); }

  long order(const Rational& a) const { return adic_.order(a); }
  ValueGroupElement value(const Rational& a) const {
    return sgn(a) == 0 ? ValueGroupElement::infinity() : ValueGroupElement(Rational(order(a)));
  }
  Rational uniformizer() const { return Rational(adic_.p); }
  GF residue(const Rational& a) const {
    if (order(a) < 0) throw DomainError("not in valuation ring");
    return adic_.to_residue(adic_.from_field(a, adic_.p));
  }
  Rational lift(const GF& r) const { return adic_.to_field(adic_.from_residue(r)); }
  Rational transport(const Rational& a) const { return a; }
  DiscreteValuation finite() const { return *this; }
  bool operator==(const DiscreteValuation& o) const { return adic_.p == o.adic_.p; }

 private:
  Adic adic_;
};

/// Valuation on F_p(t) at a monic irreducible pi(t), or at the place 1/t.
template <>
class DiscreteValuation<RatFunc> {
 public:
  using Field = RatFunc;
  using Adic = PolynomialAdic;
  static constexpr long kInfinite = PolynomialAdic::kInfinite;

  DiscreteValuation(std::uint64_t p, const FpPoly& pi) : adic_(pi), infinite_(false) {
    if (pi.prime() != p) throw DomainError("place polynomial lives over a different prime field");
    if (pi.degree() < 1 || !is_irreducible(pi)) throw DomainError("place polynomial must be irreducible");
  }
  static DiscreteValuation at_infinity(std::uint64_t p) {
    DiscreteValuation v(p, FpPoly::monomial(p, 1, 1));
    v.infinite_ = true;
    return v;
  }

  RatFunc proto() const { return RatFunc(prime()); }
  std::uint64_t prime() const { return adic_.pi_poly.prime(); }
  std::uint64_t residue_char() const { return prime(); }
  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }
  const FpPoly& place() const { return adic_.pi_poly; }
  const Adic& adic() const {
    if (infinite_) throw DomainError("adic ring at infinity: transport to the t-adic place first");
    return adic_;
  }
  const GFContextPtr& residue_field() const { return adic_.residue; }
  std::string descriptor() const {
    return "Fp(" + std::to_string(prime()) + ",t)@" + (infinite_ ? std::string("inf") : adic_.pi_poly.to_string("t"));
  }

  long order(const RatFunc& a) const {
    if (a.is_zero()) return kInfinite;
    if (infinite_) return a.den().degree() - a.num().degree();
    return adic_.order(a);
  }
  ValueGroupElement value(const RatFunc& a) const {
    return a.is_zero() ? ValueGroupElement::infinity() : ValueGroupElement(Rational(order(a)));
  }
  RatFunc uniformizer() const {
    if (infinite_) return RatFunc(FpPoly::constant(prime(), 1), FpPoly::monomial(prime(), 1, 1));
    return adic_.field_pi();
  }
  GF residue(const RatFunc& a) const {
    long o = order(a);
    if (o < 0) throw DomainError("not in valuation ring");
    if (infinite_) {
      if (o > 0) return GF(adic_.residue);
      return GF(adic_.residue, modp::mul(a.num().lc(), modp::inv(a.den().lc(), prime()), prime()));
    }
    return adic_.to_residue(adic_.from_field(a, adic_.pi_poly));
  }
  RatFunc lift(const GF& r) const { return RatFunc(r.to_poly()); }
  /// The automorphism t -> 1/t when this is the infinite place, else identity.
  /// It carries the place 1/t to the place t.
  RatFunc transport(const RatFunc& a) const {
    if (!infinite_ || a.is_zero()) return a;
    int dn = a.num().degree(), dd = a.den().degree();
    FpPoly n = a.num().reversed(dn), d = a.den().reversed(dd);
    if (dd > dn)
      n = n.shifted(dd - dn);
    else
      d = d.shifted(dn - dd);
    return RatFunc(n, d);
  }
  /// The finite place that transport() maps this one to.
  DiscreteValuation finite() const {
    DiscreteValuation v = *this;
    v.infinite_ = false;
    return v;
  }
  bool operator==(const DiscreteValuation& o) const { return infinite_ == o.infinite_ && adic_.pi_poly == o.adic_.pi_poly; }

 private:
  Adic adic_;
  bool infinite_;
};

/// Canonical representative of a + pi^k O_v, for any a (negative values allowed).
template <class F>
F reduce_mod_power(const DiscreteValuation<F>& v, const F& a, long k) {
  if (is_zero(a)) return a;
  const auto& adic = v.adic();
  long o = v.order(a);
  if (o >= k) return zero_like(a);
  long s = o < 0 ? -o : 0;
  F pis = adic.to_field(adic.pi_pow(s));
  F b = a * pis;
  auto r = adic.from_field(b, adic.pi_pow(k + s));
  return adic.to_field(r) / pis;
}

/// x <= y iff y/x lies in O_v, on nonzero elements.
template <class F>
struct ValuationRelation {
  DiscreteValuation<F> v;
  bool leq(const F& x, const F& y) const {
    if (is_zero(x) || is_zero(y)) throw DomainError("relation is defined on nonzero elements");
    return v.order(y / x) >= 0;
  }
};

struct NewtonSegment {
  Rational slope;
  int length;
  bool operator==(const NewtonSegment& o) const { return slope == o.slope && length == o.length; }
};

/// Lower convex hull of {(i, v(a_i))}. Powers of x dividing f are removed
/// first and reported through zero_roots.
template <class F>
std::vector<NewtonSegment> newton_polygon(const Poly<F>& f, const DiscreteValuation<F>& v, int* zero_roots = nullptr) {
  if (f.is_zero()) throw DomainError("Newton polygon of the zero polynomial");
  int low = 0;
  while (is_zero(f.coeff(low))) ++low;
  if (zero_roots) *zero_roots = low;
  std::vector<std::pair<int, long>> pts;
  for (int i = low; i <= f.degree(); ++i)
    if (!is_zero(f.coeff(i))) pts.emplace_back(i, v.order(f.coeff(i)));
  std::vector<std::pair<int, long>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      auto [x1, y1] = hull[hull.size() - 2];
      auto [x2, y2] = hull.back();
      // drop the middle point when it lies on or above the chord
      if ((y2 - y1) * (pt.first - x1) >= (pt.second - y1) * (x2 - x1))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  std::vector<NewtonSegment> out;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    int len = hull[i].first - hull[i - 1].first;
    out.push_back({make_rational(hull[i].second - hull[i - 1].second, len), len});
  }
  for (auto& s : out) s.slope.canonicalize();
  return out;
}

/// Finite-precision element of the completion: pi^valuation * unit, the unit
/// known modulo pi^precision.
template <class Adic>
class LocalElement {
 public:
  using R = typename Adic::R;

  LocalElement(const Adic& adic, long valuation, R unit, long precision)
      : adic_(adic), val_(valuation), prec_(precision) {
    if (precision < 1) throw PrecisionError("local element without known digits", 2);
    unit_ = adic.reduce(unit, adic.pi_pow(precision));
    if (adic.order(unit_) != 0) throw DomainError("unit part must be a unit");
  }
  /// From an exact field element, keeping `precision` digits of the unit.
  static LocalElement from_field(const Adic& adic, const typename Adic::Field& a, long precision) {
    long o = adic.order(a);
    if (o >= Adic::kInfinite) throw DomainError("local element of zero");
    typename Adic::Field u = a / adic.to_field(o >= 0 ? adic.pi_pow(o) : adic.one()) * adic.to_field(o < 0 ? adic.pi_pow(-o) : adic.one());
    return LocalElement(adic, o, adic.from_field(u, adic.pi_pow(precision)), precision);
  }
  /// From a representative known modulo pi^abs_precision.
  static std::optional<LocalElement> from_residue_class(const Adic& adic, const R& a, long abs_precision) {
    R r = adic.reduce(a, adic.pi_pow(abs_precision));
    long o = adic.order(r);
    if (o >= abs_precision) return std::nullopt;
    R u = r / adic.pi_pow(o);
    return LocalElement(adic, o, u, abs_precision - o);
  }

  long valuation() const { return val_; }
  long precision() const { return prec_; }
  long absolute_precision() const { return val_ + prec_; }
  const R& unit() const { return unit_; }
  /// pi-adic digits of the unit part, lowest first.
  std::vector<GF> digits() const {
    std::vector<GF> d;
    R r = unit_;
    for (long i = 0; i < prec_; ++i) {
      R low = adic_.reduce(r, adic_.pi());
      d.push_back(adic_.to_residue(low));
      r = (r - low) / adic_.pi();
    }
    return d;
  }
  /// Representative of the element modulo pi^absolute_precision (needs valuation >= 0).
  R representative() const {
    if (val_ < 0) throw DomainError("representative of a non-integral local element");
    return adic_.reduce(adic_.pi_pow(val_) * unit_, adic_.pi_pow(absolute_precision()));
  }
  typename Adic::Field approximation() const {
    auto u = adic_.to_field(unit_);
    return val_ >= 0 ? u * adic_.to_field(adic_.pi_pow(val_)) : u / adic_.to_field(adic_.pi_pow(-val_));
  }

  LocalElement operator*(const LocalElement& o) const {
    long p = std::min(prec_, o.prec_);
    return LocalElement(adic_, val_ + o.val_, unit_ * o.unit_, p);
  }
  LocalElement operator+(const LocalElement& o) const {
    long base = std::min(val_, o.val_);
    long abs = std::min(absolute_precision(), o.absolute_precision());
    R m = adic_.pi_pow(abs - base);
    R s = adic_.reduce(shift(base) + o.shift(base), m);
    long so = adic_.order(s);
    if (so >= abs - base) throw PrecisionError("cancellation exhausted the known digits", static_cast<int>(2 * abs));
    R u = s / adic_.pi_pow(so);
    return LocalElement(adic_, base + so, u, abs - base - so);
  }
  LocalElement operator-() const { return LocalElement(adic_, val_, adic_.zero() - unit_, prec_); }
  LocalElement operator-(const LocalElement& o) const { return *this + (-o); }
  bool operator==(const LocalElement& o) const { return val_ == o.val_ && prec_ == o.prec_ && unit_ == o.unit_; }

 private:
  R shift(long base) const { return adic_.pi_pow(val_ - base) * unit_; }

  Adic adic_;
  long val_;
  R unit_;
  long prec_;
};

}  // namespace valext
