#include "doctest.h"

#include "valext/errors.hpp"
#include "valext/finite_factor.hpp"
#include "valext/rational_factor.hpp"

using namespace valext;

namespace {

QPoly qpoly(std::vector<long> c) {
  std::vector<Rational> v(c.begin(), c.end());
  return QPoly(Rational(0), std::move(v));
}

GFPoly gfpoly(const GFContextPtr& k, std::vector<long> c) {
  std::vector<GF> v;
  for (long a : c) v.push_back(int_like(GF(k), a));
  return GFPoly(GF(k), std::move(v));
}

}  // namespace

TEST_CASE("factor over F_5 splits x^2+1") {
  auto k = GFContext::prime_field(5);
  auto fac = factor_finite(gfpoly(k, {1, 0, 1}));
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first == gfpoly(k, {2, 1}));
  CHECK(fac[1].first == gfpoly(k, {3, 1}));
}

TEST_CASE("factor over F_2 with multiplicity") {
  auto k = GFContext::prime_field(2);
  auto fac = factor_finite(gfpoly(k, {0, 1, 0, 1}));
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first == gfpoly(k, {0, 1}));
  CHECK(fac[0].second == 1);
  CHECK(fac[1].first == gfpoly(k, {1, 1}));
  CHECK(fac[1].second == 2);
}

TEST_CASE("factor over F_4") {
  auto k = GFContext::extension(FpPoly(2, {1, 1, 1}));
  auto fac = factor_finite(gfpoly(k, {1, 1, 1}));
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first.degree() == 1);
}

TEST_CASE("Zassenhaus over Q") {
  auto fac = factor_rational(qpoly({-1, 0, 0, 0, 1}));
  REQUIRE(fac.size() == 3);
  CHECK(fac[0].first == qpoly({-1, 1}));
  CHECK(fac[1].first == qpoly({1, 1}));
  CHECK(fac[2].first == qpoly({1, 0, 1}));
  CHECK(is_irreducible_rational(qpoly({1, 0, 0, 0, 1})));
  CHECK(is_irreducible_rational(qpoly({-2, 0, 0, 1})));
  // Swinnerton-Dyer polynomial for sqrt2, sqrt3: splits modulo every prime
  CHECK(is_irreducible_rational(qpoly({1, 0, -10, 0, 1})));
  auto sq = factor_rational(qpoly({1, 2, 1}) * qpoly({-2, 0, 1}));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].second == 2);
  CHECK(sq[1].first == qpoly({-2, 0, 1}));
}

TEST_CASE("rescaling of non-integral coefficients") {
  QPoly f = QPoly(Rational(0), {Rational(-1, 4), Rational(0), Rational(1)});
  auto fac = factor_rational(f);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first == QPoly(Rational(0), {Rational(-1, 2), Rational(1)}));
}

#include "valext/function_factor.hpp"

namespace {

RatFunc tpoly(std::uint64_t p, std::vector<std::uint64_t> c) { return RatFunc(FpPoly(p, std::move(c))); }

}  // namespace

TEST_CASE("factor over F_3(t)") {
  const std::uint64_t p = 3;
  RatFunc one = RatFunc::constant(p, 1);
  FPoly x2_t(RatFunc(p), {-RatFunc::t(p), RatFunc(p), one});
  CHECK(is_irreducible_function_field(x2_t));
  FPoly x2_t2(RatFunc(p), {-tpoly(p, {0, 0, 1}), RatFunc(p), one});
  auto fac = factor_function_field(x2_t2);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first.degree() == 1);
  FPoly lin(RatFunc(p), {tpoly(p, {1, 1}) / tpoly(p, {0, 1}), one});
  auto fac2 = factor_function_field(x2_t * lin * lin);
  REQUIRE(fac2.size() == 2);
  CHECK(fac2[0].first == lin);
  CHECK(fac2[0].second == 2);
  CHECK(fac2[1].first == x2_t);
  FPoly cubic(RatFunc(p), {-tpoly(p, {1, 0, 1}), one, RatFunc(p), one});
  CHECK(is_irreducible_function_field(cubic));
  FPoly insep(RatFunc(p), {-RatFunc::t(p), RatFunc(p), RatFunc(p), one});
  CHECK_THROWS_AS(factor_function_field(insep), DomainError);
}
