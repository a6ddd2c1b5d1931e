#include "doctest.h"

#include "valext/tower.hpp"

using namespace valext;

namespace {

QPoly qp(std::vector<long> c) {
  std::vector<Rational> v(c.begin(), c.end());
  return QPoly(Rational(0), std::move(v));
}

}  // namespace

TEST_CASE("number field arithmetic") {
  auto k = make_field(qp({-2, 0, 1}));
  auto r = NfElem<Rational>::generator(k);
  CHECK((r * r).is_scalar());
  CHECK((r * r).scalar() == 2);
  CHECK((r.inverse() * r).is_one());
  CHECK(norm(r + NfElem<Rational>(k, Rational(1))) == -1);
  CHECK(trace(r) == 0);
  CHECK(minimal_polynomial(r) == qp({-2, 0, 1}));
  CHECK(minimal_polynomial(one_like(r)) == qp({-1, 1}));
}

TEST_CASE("irreducibility over a quadratic field") {
  auto k = make_field(qp({-2, 0, 1}));
  CHECK(is_irreducible_over(lift_poly(qp({1, 0, 1}), k)));
  CHECK_FALSE(is_irreducible_over(lift_poly(qp({-2, 0, 1}), k)));
  auto fac = factor_over(lift_poly(qp({-2, 0, 1}), k));
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first.degree() == 1);
  // x^4 - 2 = (x^2 - sqrt2)(x^2 + sqrt2)
  auto fac4 = factor_over(lift_poly(qp({-2, 0, 0, 0, 1}), k));
  REQUIRE(fac4.size() == 2);
  CHECK(fac4[0].first.degree() == 2);
  CHECK_THROWS_AS(is_irreducible_over(lift_poly(qp({1, 0, 2}), k)), DomainError);
}

TEST_CASE("primitive element of Q(sqrt2, i)") {
  FieldTower<Rational> tw(Rational(0));
  tw.add_step(qp({-2, 0, 1}));
  tw.add_step(qp({1, 0, 1}));
  CHECK(tw.degree() == 4);
  auto [th, m] = tw.primitive_element();
  CHECK(m == qp({9, 0, -2, 0, 1}));
  auto s2 = tw.generator(0), i = tw.generator(1);
  CHECK(th == s2 + i);
  CHECK((s2 * s2).scalar() == 2);
  CHECK((i * i).scalar() == -1);
  auto coords = tw.tower_coords(th);
  REQUIRE(coords.size() == 2);
  CHECK(coords[1].is_one());
  CHECK_THROWS_AS(tw.add_step(qp({-2, 0, 1})), DomainError);
}

TEST_CASE("primitive element over F_3(t)") {
  const std::uint64_t p = 3;
  FieldTower<RatFunc> tw{RatFunc(p)};
  FPoly g(RatFunc(p), {-RatFunc::t(p), RatFunc(p), RatFunc::constant(p, 1)});
  tw.add_step(g);
  auto [th, m] = tw.primitive_element();
  CHECK(m == g);
  CHECK(th == tw.generator(0));
}

TEST_CASE("minimal polynomial of a root in a one-step tower") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-6, 6);
  int checked = 0;
  while (checked < 20) {
    int d = 1 + static_cast<int>(rng() % 4);
    std::vector<long> c(d + 1);
    for (auto& a : c) a = coef(rng);
    c[d] = 1;
    QPoly f = qp(c);
    if (!is_irreducible_rational(f)) continue;
    FieldTower<Rational> tw(Rational(0));
    tw.add_step(f);
    CHECK_MESSAGE(minimal_polynomial(tw.generator(0)) == f, std::string(f.to_string() + " -> " + minimal_polynomial(tw.generator(0)).to_string()));
    ++checked;
  }
}
