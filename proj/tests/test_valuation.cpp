#include "doctest.h"

#include <random>

#include "valext/base_field.hpp"
#include "valext/valuation.hpp"

using namespace valext;

namespace {

QPoly qp(std::vector<long> c) {
  std::vector<Rational> v(c.begin(), c.end());
  return QPoly(Rational(0), std::move(v));
}

RatFunc rf(std::uint64_t p, std::vector<std::uint64_t> n, std::vector<std::uint64_t> d = {1}) {
  return RatFunc(FpPoly(p, std::move(n)), FpPoly(p, std::move(d)));
}

}  // namespace

TEST_CASE("values and residues") {
  DiscreteValuation<Rational> v2(2), v5(5);
  CHECK(v2.value(Rational(12)) == ValueGroupElement(Rational(2)));
  CHECK(v2.value(Rational(3, 2)) == ValueGroupElement(Rational(-1)));
  CHECK(v2.value(Rational(0)).is_infinite());
  CHECK(v2.residue(Rational(7, 3)) == GF(v2.residue_field(), 1));
  CHECK(v5.residue(Rational(12)) == GF(v5.residue_field(), 2));
  CHECK_THROWS_AS(v2.residue(Rational(1, 2)), DomainError);

  DiscreteValuation<RatFunc> vt(3, FpPoly(3, {0, 1}));
  CHECK(vt.order(rf(3, {0, 0, 1}, {1, 1})) == 2);
  CHECK(vt.residue(rf(3, {2, 1}, {1, 1})) == GF(vt.residue_field(), 2));
  auto vinf = DiscreteValuation<RatFunc>::at_infinity(3);
  CHECK(vinf.order(rf(3, {0, 0, 1}, {1, 1})) == -1);
  CHECK(vinf.order(vinf.uniformizer()) == 1);
  CHECK(vinf.residue(rf(3, {1, 2}, {0, 1})) == GF(vinf.residue_field(), 2));
  // transport carries the place at infinity to the place t
  RatFunc a = rf(3, {1, 0, 2}, {1, 1, 1, 1, 1});
  CHECK(vinf.order(a) == vt.order(vinf.transport(a)));
  DiscreteValuation<RatFunc> vt1(3, FpPoly(3, {1, 1}));
  CHECK(vt1.order(rf(3, {1, 2, 1})) == 2);
}

TEST_CASE("ultrametric inequality and relation axioms over sampled elements") {
  std::mt19937_64 rng(11);
  BaseField<Rational> q;
  DiscreteValuation<Rational> v3(3);
  ValuationRelation<Rational> rel{v3};
  for (int i = 0; i < 1000; ++i) {
    Rational a = q.random(rng, 40), b = q.random(rng, 40), c = q.random(rng, 40);
    if (sgn(a) == 0 || sgn(b) == 0 || sgn(c) == 0) continue;
    auto va = v3.value(a), vb = v3.value(b), vs = v3.value(a + b);
    CHECK(std::min(va, vb) <= vs);
    if (!(va == vb)) CHECK(vs == std::min(va, vb));
    CHECK(v3.value(a * b) == va + vb);
    CHECK((rel.leq(a, b) || rel.leq(b, a)));
    if (rel.leq(a, b) && rel.leq(b, c)) CHECK(rel.leq(a, c));
    if (rel.leq(a, b)) CHECK(rel.leq(a * c, b * c));
    if (sgn(a + b) != 0) CHECK((rel.leq(a, a + b) || rel.leq(b, a + b)));
    CHECK((v3.order(a) >= 0 || v3.order(1 / a) >= 0));
  }
}

TEST_CASE("Newton polygons") {
  DiscreteValuation<Rational> v2(2);
  CHECK(newton_polygon(qp({-2, 0, 1}), v2) == std::vector<NewtonSegment>{{Rational(-1, 2), 2}});
  CHECK(newton_polygon(qp({-3, 0, 1}), v2) == std::vector<NewtonSegment>{{Rational(0), 2}});
  CHECK(newton_polygon(qp({2, 1, -2, 1}), v2) ==
        std::vector<NewtonSegment>{{Rational(-1), 1}, {Rational(0), 2}});
  int z = 0;
  auto np = newton_polygon(qp({0, 0, 4, 1}), v2, &z);
  CHECK(z == 2);
  CHECK(np == std::vector<NewtonSegment>{{Rational(-2), 1}});
  CHECK_THROWS_AS(newton_polygon(QPoly(Rational(0)), v2), DomainError);
}

TEST_CASE("local elements track precision") {
  IntegerAdic a5(5);
  auto x = LocalElement<IntegerAdic>::from_field(a5, Rational(50, 3), 4);
  CHECK(x.valuation() == 2);
  CHECK(x.precision() == 4);
  auto y = LocalElement<IntegerAdic>::from_field(a5, Rational(-50, 3), 3);
  CHECK_THROWS_AS(x + y, PrecisionError);
  auto z = LocalElement<IntegerAdic>::from_field(a5, Rational(7), 3);
  auto s = x + z;
  CHECK(s.valuation() == 0);
  CHECK(s.precision() == 3);
  auto d = z.digits();
  REQUIRE(d.size() == 3);
  CHECK(d[0] == GF(a5.residue, 2));
  CHECK(d[1] == GF(a5.residue, 1));
  CHECK((x * z).valuation() == 2);
}
