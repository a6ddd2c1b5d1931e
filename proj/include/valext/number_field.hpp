#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "valext/base_field.hpp"
#include "valext/errors.hpp"
#include "valext/linalg.hpp"
#include "valext/poly.hpp"

namespace valext {

/// F[X]/(m) for a monic irreducible separable m over the base field F.
template <class F>
struct SimpleField {
  Poly<F> modulus;
  std::string var = "a";

  explicit SimpleField(Poly<F> m, std::string v = "a") : modulus(std::move(m)), var(std::move(v)) {
    if (modulus.degree() < 1 || !modulus.is_monic()) throw DomainError("field modulus must be monic of degree >= 1");
  }
  int degree() const { return modulus.degree(); }
  const F& proto() const { return modulus.proto(); }
};

template <class F>
using FieldPtr = std::shared_ptr<const SimpleField<F>>;

template <class F>
FieldPtr<F> make_field(Poly<F> m, std::string var = "a") {
  return std::make_shared<const SimpleField<F>>(std::move(m), std::move(var));
}

/// The base field itself as F[X]/(X).
template <class F>
FieldPtr<F> trivial_field(const F& proto) {
  return make_field(Poly<F>::x(proto), "a");
}

template <class F>
class NfElem {
 public:
  NfElem() = default;
  explicit NfElem(FieldPtr<F> k) : k_(std::move(k)), a_(k_->proto()) {}
  NfElem(FieldPtr<F> k, const Poly<F>& a) : k_(std::move(k)), a_(a % k_->modulus) {}
  NfElem(FieldPtr<F> k, const F& c) : k_(std::move(k)), a_(Poly<F>::constant(c)) {}
  static NfElem generator(FieldPtr<F> k) { return NfElem(k, Poly<F>::x(k->proto())); }
  static NfElem from_coords(FieldPtr<F> k, const Vec<F>& c) { return NfElem(k, Poly<F>(k->proto(), c), true); }

  const FieldPtr<F>& field() const { return k_; }
  const Poly<F>& poly() const { return a_; }
  int degree() const { return k_->degree(); }
  Vec<F> coords() const {
    Vec<F> c(k_->degree(), zero_like(k_->proto()));
    for (int i = 0; i <= a_.degree(); ++i) c[i] = a_.coeff(i);
    return c;
  }
  bool is_zero() const { return a_.is_zero(); }
  bool is_one() const { return a_.degree() == 0 && detail::scalar_is_one(a_.coeff(0)); }
  bool is_scalar() const { return a_.degree() <= 0; }
  F scalar() const { return a_.coeff(0); }

  NfElem operator+(const NfElem& o) const { return NfElem(pick(o), a_ + o.a_, true); }
  NfElem operator-(const NfElem& o) const { return NfElem(pick(o), a_ - o.a_, true); }
  NfElem operator-() const { return NfElem(k_, -a_, true); }
  NfElem operator*(const NfElem& o) const {
    const auto& k = pick(o);
    return NfElem(k, (a_ * o.a_) % k->modulus, true);
  }
  NfElem operator/(const NfElem& o) const { return *this * o.inverse(); }
  NfElem& operator+=(const NfElem& o) { return *this = *this + o; }
  NfElem& operator-=(const NfElem& o) { return *this = *this - o; }
  NfElem& operator*=(const NfElem& o) { return *this = *this * o; }
  NfElem& operator/=(const NfElem& o) { return *this = *this / o; }
  NfElem scaled(const F& s) const { return NfElem(k_, a_.scaled(s), true); }
  NfElem inverse() const {
    if (a_.is_zero()) throw DomainError("division by zero in number field");
    return NfElem(k_, inv_mod(a_, k_->modulus), true);
  }
  NfElem pow(unsigned long e) const {
    NfElem r(k_, one_like(k_->proto())), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }
  bool operator==(const NfElem& o) const { return a_ == o.a_; }
  bool operator!=(const NfElem& o) const { return !(a_ == o.a_); }
  bool operator<(const NfElem& o) const {
    if (a_.degree() != o.a_.degree()) return a_.degree() < o.a_.degree();
    for (int i = a_.degree(); i >= 0; --i)
      if (a_.coeff(i) != o.a_.coeff(i)) return a_.coeff(i) < o.a_.coeff(i);
    return false;
  }
  std::string to_string() const {
    if (a_.degree() <= 0) return detail::scalar_to_string(a_.coeff(0));
    return "(" + a_.to_string(k_->var) + ")";
  }

 private:
  NfElem(FieldPtr<F> k, Poly<F> a, bool) : k_(std::move(k)), a_(std::move(a)) {}
  const FieldPtr<F>& pick(const NfElem& o) const { return k_ ? k_ : o.k_; }

  FieldPtr<F> k_;
  Poly<F> a_;
};

template <class F>
NfElem<F> zero_like(const NfElem<F>& a) {
  return NfElem<F>(a.field());
}
template <class F>
NfElem<F> one_like(const NfElem<F>& a) {
  return NfElem<F>(a.field(), one_like(a.field()->proto()));
}
template <class F>
NfElem<F> int_like(const NfElem<F>& a, long n) {
  return NfElem<F>(a.field(), int_like(a.field()->proto(), n));
}
template <class F>
bool is_zero(const NfElem<F>& a) {
  return a.is_zero();
}
template <class F>
bool is_one(const NfElem<F>& a) {
  return a.is_one();
}
template <class F>
NfElem<F> inv(const NfElem<F>& a) {
  return a.inverse();
}
template <class F>
std::uint64_t characteristic(const NfElem<F>& a) {
  return characteristic(a.field()->proto());
}
template <class F>
std::string to_string(const NfElem<F>& a) {
  return a.to_string();
}

/// Row i holds the coordinates of b * X^i.
template <class F>
Matrix<F> mult_matrix(const NfElem<F>& b) {
  const auto& k = b.field();
  Matrix<F> m;
  NfElem<F> cur = b;
  NfElem<F> x = NfElem<F>::generator(k);
  for (int i = 0; i < k->degree(); ++i) {
    m.push_back(cur.coords());
    cur = cur * x;
  }
  return m;
}

template <class F>
F norm(const NfElem<F>& b) {
  return determinant(mult_matrix(b));
}

template <class F>
F trace(const NfElem<F>& b) {
  auto m = mult_matrix(b);
  F t = zero_like(b.field()->proto());
  for (std::size_t i = 0; i < m.size(); ++i) t = t + m[i][i];
  return t;
}

/// Monic minimal polynomial of a vector under a linear recurrence: the first
/// linear dependence among v_0, ..., v_d, given as coefficients c_0..c_{d-1}
/// with v_d = -sum c_i v_i.
template <class F>
Poly<F> minimal_relation(const std::vector<Vec<F>>& powers, const F& proto) {
  Matrix<F> rows;
  for (std::size_t d = 0; d < powers.size(); ++d) {
    if (!rows.empty()) {
      auto sol = solve_left(rows, powers[d]);
      if (sol) {
        std::vector<F> c(d + 1, zero_like(proto));
        for (std::size_t i = 0; i < d; ++i) c[i] = -(*sol)[i];
        c[d] = one_like(proto);
        return Poly<F>(proto, std::move(c));
      }
    }
    rows.push_back(powers[d]);
  }
  throw DomainError("no linear relation among supplied powers");
}

/// Minimal polynomial over the base field F.
template <class F>
Poly<F> minimal_polynomial(const NfElem<F>& a) {
  const int n = a.field()->degree();
  std::vector<Vec<F>> pw;
  NfElem<F> cur = one_like(a);
  for (int i = 0; i <= n; ++i) {
    pw.push_back(cur.coords());
    cur = cur * a;
  }
  return minimal_relation(pw, a.field()->proto());
}

template <class F>
NfElem<F> evaluate(const Poly<F>& p, const NfElem<F>& a) {
  NfElem<F> r = zero_like(a);
  for (int i = p.degree(); i >= 0; --i) r = r * a + NfElem<F>(a.field(), p.coeff(i));
  return r;
}

template <class F>
NfElem<F> evaluate(const Poly<NfElem<F>>& p, const NfElem<F>& a) {
  NfElem<F> r = zero_like(a);
  for (int i = p.degree(); i >= 0; --i) r = r * a + p.coeff(i);
  return r;
}

/// Embed a polynomial over F into a polynomial over the field k.
template <class F>
Poly<NfElem<F>> lift_poly(const Poly<F>& f, const FieldPtr<F>& k) {
  std::vector<NfElem<F>> c;
  for (const auto& a : f.coeffs()) c.emplace_back(k, a);
  return Poly<NfElem<F>>(NfElem<F>(k), std::move(c));
}

/// Substitute X -> image in an element of k, landing in image's field.
template <class F>
NfElem<F> substitute(const NfElem<F>& a, const NfElem<F>& image) {
  return evaluate(a.poly(), image);
}

}  // namespace valext
