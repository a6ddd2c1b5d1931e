#include "doctest.h"

#include <random>

#include "valext/extension.hpp"
#include "valext/parse.hpp"

using namespace valext;

namespace {

QPoly qp(const std::string& s) { return to_rational_poly(parse_polynomial(s)); }

std::vector<std::pair<int, int>> ef(const SplittingData<Rational>& sd) {
  std::vector<std::pair<int, int>> out;
  for (const auto& w : sd.extensions) out.emplace_back(w.e, w.f);
  return out;
}

}  // namespace

TEST_CASE("extend_valuation examples") {
  using P = std::vector<std::pair<int, int>>;
  CHECK(ef(ValuedExtension<Rational>(DiscreteValuation<Rational>(2), qp("x^3-2*x^2+x+2")).splitting()) ==
        P{{1, 1}, {2, 1}});
  CHECK(ef(ValuedExtension<Rational>(DiscreteValuation<Rational>(2), qp("x^2+7")).splitting()) == P{{1, 1}, {1, 1}});
  CHECK(ef(ValuedExtension<Rational>(DiscreteValuation<Rational>(5), qp("x^2+1")).splitting()) == P{{1, 1}, {1, 1}});
  CHECK(ef(ValuedExtension<Rational>(DiscreteValuation<Rational>(2), qp("x^2+1")).splitting()) == P{{2, 1}});
  CHECK_THROWS_AS(ValuedExtension<Rational>(DiscreteValuation<Rational>(2), qp("x^2-1")), DomainError);
}

TEST_CASE("invariant bundles") {
  ValuedExtension<Rational> c(DiscreteValuation<Rational>(2), qp("x^3-2*x^2+x+2"));
  auto b = c.invariants(1);
  CHECK(b.e == 2);
  CHECK(b.e_t == 1);
  CHECK(b.e_w == 2);
  CHECK(b.f_s == 1);
  CHECK(b.f_i == 1);
  CHECK(b.n == 2);
  CHECK(b.d == 1);
  CHECK(b.d_w == 2);
  CHECK(b.g == 2);
  ValuedExtension<Rational> triv(DiscreteValuation<Rational>(7), qp("x-3"));
  CHECK(triv.invariants(0).same_nine(InvariantBundle{}));
  ValuedExtension<Rational> i3(DiscreteValuation<Rational>(3), qp("x^2+1"));
  auto b3 = i3.invariants(0);
  CHECK(b3.e == 1);
  CHECK(b3.f == 2);
  CHECK(b3.f_s == 2);
  CHECK(b3.n == 2);
  CHECK(b3.d_w == 1);
  CHECK(i3.splitting().extensions[0].residue_field_modulus.degree() == 2);
  ValuedExtension<Rational> t3(DiscreteValuation<Rational>(3), qp("x^3-3"));
  CHECK(t3.invariants(0).e_w == 3);
  ValuedExtension<Rational> t5(DiscreteValuation<Rational>(5), qp("x^2-5"));
  CHECK(t5.invariants(0).e_t == 2);
  CHECK(t5.invariants(0).d_w == 1);
}

TEST_CASE("fast path") {
  auto a = explicit_extensions_fast_path(DiscreteValuation<Rational>(5), qp("x^2+1"));
  CHECK(a.applicable);
  CHECK(a.residue_degrees == std::vector<int>{1, 1});
  CHECK_FALSE(explicit_extensions_fast_path(DiscreteValuation<Rational>(2), qp("x^3-2*x^2+x+2")).applicable);
  auto c = explicit_extensions_fast_path(DiscreteValuation<Rational>(3), qp("x^2+1"));
  CHECK(c.applicable);
  CHECK(c.residue_degrees == std::vector<int>{2});
}

TEST_CASE("fast path agrees with the general engine") {
  std::mt19937_64 rng(11);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int deg = 2 + static_cast<int>(rng() % 3);
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.push_back(Rational(static_cast<long>(rng() % 21) - 10));
    c.push_back(Rational(1));
    QPoly f(Rational(0), c);
    if (!is_irreducible_rational(f)) continue;
    for (std::uint64_t p : {2, 3, 5, 7}) {
      DiscreteValuation<Rational> v(p);
      auto fp = explicit_extensions_fast_path(v, f);
      if (!fp.applicable) continue;
      ValuedExtension<Rational> ext(v, f);
      std::vector<int> fs;
      for (const auto& w : ext.splitting().extensions) {
        CHECK(w.e == 1);
        fs.push_back(w.f);
      }
      std::ranges::sort(fs);
      CHECK(fs == fp.residue_degrees);
      ++compared;
    }
  }
  CHECK(compared > 20);
}

TEST_CASE("hensel_factor") {
  DiscreteValuation<Rational> v5(5);
  auto fs = hensel_factor(v5, qp("x^2+1"), 2);
  REQUIRE(fs.size() == 2);
  std::vector<Integer> roots;
  for (const auto& f : fs) {
    REQUIRE(f.degree() == 1);
    Integer r = (Integer(25) - f.coeffs[0]) % 25;
    roots.push_back(r);
  }
  std::ranges::sort(roots);
  CHECK(roots == std::vector<Integer>{7, 18});
  CHECK(hensel_factor(v5, qp("x^2-2")).size() == 1);
  auto cub = hensel_factor(DiscreteValuation<Rational>(2), qp("x^3-2*x^2+x+2"));
  REQUIRE(cub.size() == 2);
  CHECK(cub[0].degree() + cub[1].degree() == 3);
  CHECK(std::min(cub[0].degree(), cub[1].degree()) == 1);
  CHECK_THROWS_AS(hensel_factor(v5, qp("x^2-2*x+1")), DomainError);
  CHECK_THROWS_AS(hensel_factor(DiscreteValuation<Rational>(2), qp("x^2+7"), 1), PrecisionError);
  try {
    hensel_factor(DiscreteValuation<Rational>(2), qp("x^2+7"), 1);
  } catch (const PrecisionError& e) {
    CHECK(e.suggested() == 2);
  }
}

TEST_CASE("hensel output re-multiplies to f") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int deg = 2 + static_cast<int>(rng() % 4);
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.push_back(Rational(static_cast<long>(rng() % 41) - 20));
    c.push_back(Rational(1));
    QPoly f(Rational(0), c);
    if (!is_separable(f)) continue;
    DiscreteValuation<Rational> v(3);
    auto fs = hensel_factor(v, f);
    const auto& adic = v.adic();
    Integer mod = adic.pi_pow(fs[0].precision);
    std::vector<Integer> prod{1};
    int total = 0;
    for (const auto& lf : fs) {
      prod = rpoly_mul(prod, lf.coeffs, Integer(0));
      total += lf.degree();
    }
    CHECK(total == deg);
    for (int k = 0; k <= deg; ++k) {
      Integer want = adic.from_field(f.coeff(k), mod);
      CHECK(adic.reduce(prod[k] - want, mod) == 0);
    }
  }
}

TEST_CASE("values in extensions") {
  DiscreteValuation<Rational> v2(2);
  ValuedExtension<Rational> r2(v2, qp("x^2-2"));
  auto a = NfElem<Rational>::generator(r2.field());
  CHECK(value_in_extension(r2, 0, a) == ValueGroupElement(Rational(1, 2)));
  CHECK(value_in_extension(r2, 0, NfElem<Rational>(r2.field(), Rational(40))) == ValueGroupElement(Rational(3)));
  ValuedExtension<Rational> c(v2, qp("x^3-2*x^2+x+2"));
  auto al = NfElem<Rational>::generator(c.field());
  CHECK(value_in_extension(c, 1, al - one_like(al)) == ValueGroupElement(Rational(1, 2)));

  // restriction consistency and the norm formula when g = 1 and L/K normal
  std::mt19937_64 rng(9);
  ValuedExtension<Rational> i2(v2, qp("x^2+1"));
  auto base = base_of(Rational(0));
  for (int s = 0; s < 50; ++s) {
    Rational q = base.random(rng, 40);
    if (q == 0) continue;
    CHECK(value_in_extension(i2, 0, NfElem<Rational>(i2.field(), q)) == v2.value(q));
    auto b = NfElem<Rational>::from_coords(i2.field(), {base.random(rng, 30), base.random(rng, 30)});
    if (b.is_zero()) continue;
    auto want = ValueGroupElement(make_rational(v2.order(norm(b)), 2));
    CHECK(value_in_extension(i2, 0, b) == want);
  }
}

TEST_CASE("function field extensions and the place at infinity") {
  auto fx = [&](const std::string& s) { return to_function_poly(parse_polynomial(s), 3); };
  DiscreteValuation<RatFunc> vt(3, FpPoly(3, {0, 1}));
  ValuedExtension<RatFunc> e1(vt, fx("x^2-t"));
  CHECK(e1.invariants(0).e == 2);
  auto inf = DiscreteValuation<RatFunc>::at_infinity(3);
  // x^2 - t: 1/t has odd order at infinity, so ramified there
  ValuedExtension<RatFunc> e2(inf, fx("x^2-t"));
  REQUIRE(e2.splitting().g() == 1);
  CHECK(e2.invariants(0).e == 2);
  auto y = NfElem<RatFunc>::generator(e2.field());
  CHECK(e2.value(0, y) == ValueGroupElement(Rational(-1, 2)));
  // x^2 - t^2 - 1 splits at infinity: (x/t)^2 = 1 + 1/t^2
  ValuedExtension<RatFunc> e3(inf, fx("x^2-t^2-1"));
  CHECK(e3.splitting().g() == 2);
}

TEST_CASE("tower composition") {
  DiscreteValuation<Rational> v2(2);
  FieldTower<Rational> tw{Rational(0)};
  tw.add_step(qp("x^2-2"));
  auto r = tw.generator(0);
  Poly<NfElem<Rational>> step(r, {-r, zero_like(r), one_like(r)});
  tw.add_step(step);
  ValuedExtension<Rational> lower(v2, tw.level(1));
  ValuedExtension<Rational> upper(v2, tw.level(2));
  auto embed = [&](const NfElem<Rational>& a) { return tw.embed(1, a, 2); };
  auto tc = tower_compose(lower, upper, 0, embed);
  CHECK(tc.composite.e == 4);
  CHECK(tc.lower.e == 2);
  CHECK(tc.upper.e == 2);
  CHECK(tc.composite.same_nine(tc.lower.times(tc.upper)));
  CHECK(tc.sum_upper_n == 2);

  FieldTower<Rational> bi{Rational(0)};
  bi.add_step(qp("x^2+1"));
  bi.add_step(qp("x^2+7"));
  ValuedExtension<Rational> lo(v2, bi.level(1));
  ValuedExtension<Rational> up(v2, bi.level(2));
  CHECK(lo.splitting().g() == 1);
  auto emb = [&](const NfElem<Rational>& a) { return bi.embed(1, a, 2); };
  for (std::size_t j = 0; j < up.splitting().g(); ++j) {
    auto t = tower_compose(lo, up, j, emb);
    CHECK(t.composite.same_nine(t.lower.times(t.upper)));
    CHECK(t.lower.n * t.upper.n == t.composite.n);
    CHECK(t.sum_upper_n == 2);
  }
}
