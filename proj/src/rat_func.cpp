#include "valext/rat_func.hpp"

#include "valext/errors.hpp"

namespace valext {

RatFunc::RatFunc(FpPoly num) : num_(std::move(num)), den_(FpPoly::constant(num_.prime(), 1)) {}

RatFunc::RatFunc(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::constant(std::uint64_t p, long c) {
  return RatFunc(FpPoly::constant(p, modp::reduce(c, p)));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = FpPoly::constant(num_.prime(), 1);
    return;
  }
  if (!den_.is_one()) {
    FpPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  std::uint64_t l = den_.lc();
  if (l != 1) {
    std::uint64_t li = modp::inv(l, den_.prime());
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ + o.num_);
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ - o.num_);
  if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ * o.num_);
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DomainError("division by zero in F_p(t)");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in F_p(t)");
  return RatFunc(den_, num_);
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) {
    if (num_.degree() <= 0) return num_.to_string();
    return "(" + num_.to_string() + ")";
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace valext
