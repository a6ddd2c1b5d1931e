#include "valext/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "valext/errors.hpp"

namespace valext {

namespace modp {
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}
std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
  if (nr == 0) throw DomainError("inverse of zero in F_p");
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return reduce(t, p);
}
}  // namespace modp

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p_;
  trim();
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c % p}); }

FpPoly FpPoly::monomial(std::uint64_t p, std::uint64_t c, int k) {
  std::vector<std::uint64_t> v(k + 1, 0);
  v[k] = c % p;
  return FpPoly(p, std::move(v));
}

FpPoly FpPoly::linear(std::uint64_t p, std::uint64_t c) {
  return FpPoly(p, {modp::sub(0, c % p, p), 1});
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  FpPoly r(p_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = modp::add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0, p_);
  r.trim();
  return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  FpPoly r(p_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = modp::sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0, p_);
  r.trim();
  return r;
}

FpPoly FpPoly::operator-() const {
  FpPoly r(p_);
  r.c_.reserve(c_.size());
  for (auto x : c_) r.c_.push_back(x ? p_ - x : 0);
  return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (c_.empty() || o.c_.empty()) return FpPoly(p_);
  std::vector<unsigned __int128> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(c_[i]) * o.c_[j];
  }
  FpPoly r(p_);
  r.c_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<std::uint64_t>(acc[i] % p_);
  r.trim();
  return r;
}

FpPoly FpPoly::scaled(std::uint64_t s) const {
  FpPoly r(p_);
  s %= p_;
  if (s == 0) return r;
  r.c_.reserve(c_.size());
  for (auto x : c_) r.c_.push_back(modp::mul(x, s, p_));
  return r;
}

FpPoly FpPoly::shifted(int k) const {
  if (c_.empty()) return *this;
  FpPoly r(p_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  if (degree() < d.degree()) return {FpPoly(p_), *this};
  std::vector<std::uint64_t> r = c_;
  int dd = d.degree();
  std::vector<std::uint64_t> q(degree() - dd + 1, 0);
  std::uint64_t li = modp::inv(d.lc(), p_);
  for (int i = degree(); i >= dd; --i) {
    std::uint64_t c = modp::mul(r[i], li, p_);
    if (!c) continue;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] = modp::sub(r[i - dd + j], modp::mul(c, d.c_[j], p_), p_);
  }
  r.resize(dd);
  return {FpPoly(p_, std::move(q)), FpPoly(p_, std::move(r))};
}

bool FpPoly::operator<(const FpPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; --i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

FpPoly FpPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(modp::inv(lc(), p_));
}

FpPoly FpPoly::derivative() const {
  FpPoly r(p_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = modp::mul(c_[i], i % p_, p_);
  r.trim();
  return r;
}

std::uint64_t FpPoly::eval(std::uint64_t x) const {
  std::uint64_t r = 0;
  for (int i = degree(); i >= 0; --i) r = modp::add(modp::mul(r, x, p_), c_[i], p_);
  return r;
}

FpPoly FpPoly::truncated(int k) const {
  if (static_cast<int>(c_.size()) <= k) return *this;
  return FpPoly(p_, std::vector<std::uint64_t>(c_.begin(), c_.begin() + k));
}

FpPoly FpPoly::reversed(int d) const {
  std::vector<std::uint64_t> v(d + 1, 0);
  for (int i = 0; i <= degree() && i <= d; ++i) v[d - i] = c_[i];
  return FpPoly(p_, std::move(v));
}

std::string FpPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (!c_[i]) continue;
    if (!s.empty()) s += " + ";
    bool unit = c_[i] == 1;
    if (i == 0 || !unit) s += std::to_string(c_[i]);
    if (i > 0) {
      if (!unit) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) {
  std::uint64_t p = a.prime();
  FpPoly r0 = a, r1 = b, s0 = FpPoly::constant(p, 1), s1(p), t0(p), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly ns = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(ns);
    FpPoly nt = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  std::uint64_t li = modp::inv(r0.lc(), p);
  s = s0.scaled(li);
  t = t0.scaled(li);
  return r0.scaled(li);
}

FpPoly pow_mod(FpPoly base, std::uint64_t e, const FpPoly& m) {
  FpPoly r = FpPoly::constant(m.prime(), 1) % m;
  base = base % m;
  while (e) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

FpPoly pow(const FpPoly& base, unsigned e) {
  FpPoly r = FpPoly::constant(base.prime(), 1);
  FpPoly b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

FpPoly inv_mod(const FpPoly& a, const FpPoly& m) {
  FpPoly s(m.prime()), t(m.prime());
  FpPoly g = xgcd(a % m, m, s, t);
  if (!g.is_one()) throw DomainError("polynomial not invertible modulo " + m.to_string());
  return s % m;
}

namespace {
// x^(p^k) mod f by repeated p-th powering.
FpPoly frobenius_power(const FpPoly& xq, int k, const FpPoly& f) {
  // xq = x^p mod f; composing x -> x^p k times: g(x^p) evaluated by modular composition.
  FpPoly r = FpPoly::monomial(f.prime(), 1, 1) % f;
  for (int i = 0; i < k; ++i) {
    // r <- r(x)^p = r(x^p) since coefficients lie in F_p
    FpPoly acc(f.prime());
    FpPoly pw = FpPoly::constant(f.prime(), 1);
    for (int j = 0; j <= r.degree(); ++j) {
      if (r.coeff(j)) acc += pw.scaled(r.coeff(j));
      pw = (pw * xq) % f;
    }
    r = acc;
  }
  return r;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}
}  // namespace

bool is_irreducible(const FpPoly& f) {
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  FpPoly g = f.monic();
  std::uint64_t p = g.prime();
  FpPoly x = FpPoly::monomial(p, 1, 1);
  FpPoly xp = pow_mod(x, p, g);
  if (frobenius_power(xp, n, g) != x % g) return false;
  for (int q : prime_divisors(n)) {
    FpPoly h = frobenius_power(xp, n / q, g) - x;
    if (!gcd(g, h).is_one()) return false;
  }
  return true;
}

std::vector<FpPoly> monic_irreducibles(std::uint64_t p, int degree, std::size_t limit) {
  std::vector<FpPoly> out;
  std::vector<std::uint64_t> c(degree + 1, 0);
  c[degree] = 1;
  while (out.size() < limit) {
    FpPoly f(p, c);
    if (is_irreducible(f)) out.push_back(f);
    int i = 0;
    while (i < degree) {
      if (++c[i] < p) break;
      c[i] = 0;
      ++i;
    }
    if (i == degree) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int order_at(FpPoly a, const FpPoly& pi) {
  if (a.is_zero()) throw DomainError("order of zero");
  int k = 0;
  for (;;) {
    auto [q, r] = a.divmod(pi);
    if (!r.is_zero()) return k;
    a = std::move(q);
    ++k;
  }
}

}  // namespace valext
