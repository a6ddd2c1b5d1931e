#include "valext/gf.hpp"

#include "valext/errors.hpp"

namespace valext {

GFContext::GFContext(std::uint64_t prime, FpPoly m)
    : p(prime), modulus(std::move(m)), degree(modulus.degree()), order(ipow(Integer(prime), modulus.degree())) {
  if (degree < 1 || degree > GF::kMaxDegree) throw ResourceError("finite field degree out of range");
}

GFContextPtr GFContext::prime_field(std::uint64_t p) {
  return std::make_shared<const GFContext>(p, FpPoly::linear(p, 0));
}

GFContextPtr GFContext::extension(FpPoly m) {
  std::uint64_t p = m.prime();
  return std::make_shared<const GFContext>(p, m.monic());
}

GF::GF(GFContextPtr ctx, std::uint64_t value) : ctx_(std::move(ctx)) {
  c_.fill(0);
  c_[0] = value % ctx_->p;
}

GF GF::from_poly(GFContextPtr ctx, const FpPoly& a) {
  GF r(ctx);
  FpPoly red = ctx->degree == 1 ? FpPoly::constant(ctx->p, a.eval(modp::sub(0, ctx->modulus.coeff(0), ctx->p)))
                                : a % ctx->modulus;
  for (int i = 0; i <= red.degree(); ++i) r.c_[i] = red.coeff(i);
  return r;
}

GF GF::from_index(GFContextPtr ctx, std::uint64_t index) {
  GF r(ctx);
  for (int i = 0; i < ctx->degree; ++i) {
    r.c_[i] = index % ctx->p;
    index /= ctx->p;
  }
  return r;
}

GF GF::generator(GFContextPtr ctx) {
  return from_poly(ctx, FpPoly::monomial(ctx->p, 1, 1));
}

GF GF::random(GFContextPtr ctx, std::mt19937_64& rng) {
  GF r(ctx);
  std::uniform_int_distribution<std::uint64_t> dist(0, ctx->p - 1);
  for (int i = 0; i < ctx->degree; ++i) r.c_[i] = dist(rng);
  return r;
}

FpPoly GF::to_poly() const {
  return FpPoly(ctx_->p, std::vector<std::uint64_t>(c_.begin(), c_.begin() + ctx_->degree));
}

bool GF::is_zero() const {
  for (int i = 0; i < kMaxDegree; ++i)
    if (c_[i]) return false;
  return true;
}

bool GF::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < kMaxDegree; ++i)
    if (c_[i]) return false;
  return true;
}

GF GF::operator+(const GF& o) const {
  GF r(ctx_ ? ctx_ : o.ctx_);
  std::uint64_t p = r.ctx_->p;
  for (int i = 0; i < r.ctx_->degree; ++i) r.c_[i] = modp::add(c_[i], o.c_[i], p);
  return r;
}

GF GF::operator-(const GF& o) const {
  GF r(ctx_ ? ctx_ : o.ctx_);
  std::uint64_t p = r.ctx_->p;
  for (int i = 0; i < r.ctx_->degree; ++i) r.c_[i] = modp::sub(c_[i], o.c_[i], p);
  return r;
}

GF GF::operator-() const {
  GF r(ctx_);
  for (int i = 0; i < ctx_->degree; ++i) r.c_[i] = c_[i] ? ctx_->p - c_[i] : 0;
  return r;
}

GF GF::operator*(const GF& o) const {
  const GFContext& k = *ctx_;
  GF r(ctx_);
  if (k.degree == 1) {
    r.c_[0] = modp::mul(c_[0], o.c_[0], k.p);
    return r;
  }
  int d = k.degree;
  unsigned __int128 acc[2 * kMaxDegree] = {};
  for (int i = 0; i < d; ++i) {
    if (!c_[i]) continue;
    for (int j = 0; j < d; ++j) acc[i + j] += static_cast<unsigned __int128>(c_[i]) * o.c_[j];
  }
  std::uint64_t t[2 * kMaxDegree];
  for (int i = 0; i < 2 * d - 1; ++i) t[i] = static_cast<std::uint64_t>(acc[i] % k.p);
  // reduce with the monic modulus
  for (int i = 2 * d - 2; i >= d; --i) {
    std::uint64_t c = t[i];
    if (!c) continue;
    for (int j = 0; j < d; ++j)
      t[i - d + j] = modp::sub(t[i - d + j], modp::mul(c, k.modulus.coeff(j), k.p), k.p);
  }
  for (int i = 0; i < d; ++i) r.c_[i] = t[i];
  return r;
}

GF GF::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in finite field");
  if (ctx_->degree == 1) return GF(ctx_, modp::inv(c_[0], ctx_->p));
  return from_poly(ctx_, inv_mod(to_poly(), ctx_->modulus));
}

GF GF::pow(Integer e) const {
  GF r(ctx_, 1), b = *this;
  if (e < 0) {
    b = b.inverse();
    e = -e;
  }
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) r *= b;
    b *= b;
  }
  return r;
}

bool GF::operator<(const GF& o) const {
  for (int i = GF::kMaxDegree - 1; i >= 0; --i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::string GF::to_string() const {
  if (ctx_->degree == 1) return std::to_string(c_[0]);
  return "(" + to_poly().to_string("a") + ")";
}

}  // namespace valext
