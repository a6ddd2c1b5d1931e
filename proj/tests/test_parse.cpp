#include "doctest.h"

#include "valext/errors.hpp"
#include "valext/parse.hpp"

using namespace valext;

TEST_CASE("polynomial grammar") {
  auto f = to_rational_poly(parse_polynomial("x^3 - 2*x^2 + x + 2"));
  CHECK(f == QPoly(Rational(0), {Rational(2), Rational(1), Rational(-2), Rational(1)}));
  CHECK(to_rational_poly(parse_polynomial(" ( x+1 ) ^2")) == QPoly(Rational(0), {Rational(1), Rational(2), Rational(1)}));
  CHECK(to_rational_poly(parse_polynomial("-x^2+7")).coeff(0) == 7);
  auto g = to_function_poly(parse_polynomial("x^2 - t"), 3);
  CHECK(g.coeff(0) == -RatFunc::t(3));
  CHECK(to_rational_poly(parse_polynomial("x^2-3*x*x+2")).degree() == 2);
  CHECK(to_rational_poly(parse_polynomial("x^3-2x^2+x+2")) == f);
  CHECK(to_function_poly(parse_polynomial("x^2 - 2t(t+1)"), 5) == to_function_poly(parse_polynomial("x^2-2*t^2-2*t"), 5));
  CHECK_THROWS_AS(parse_polynomial("2 3"), ParseError);
}

TEST_CASE("parse diagnostics name token and position") {
  try {
    parse_polynomial("x^2 + y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token() == "y");
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_polynomial("x^"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x+1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^-1"), ParseError);
  CHECK_THROWS_AS(to_rational_poly(parse_polynomial("x+t")), ParseError);
}

TEST_CASE("valuation descriptors") {
  auto q2 = parse_valuation("Q@2");
  CHECK(q2.base == ValuationDescriptor::Base::Rationals);
  CHECK(q2.p == 2);
  auto ft = parse_valuation("Fp(3,t)@t");
  CHECK(ft.base == ValuationDescriptor::Base::FunctionField);
  CHECK(ft.place == FpPoly(3, {0, 1}));
  CHECK(parse_valuation("Fp(3,t)@t+1").place == FpPoly(3, {1, 1}));
  CHECK(parse_valuation("Fp(3,t)@inf").infinite);
  CHECK_THROWS_AS(parse_valuation("Q@4"), ParseError);
  CHECK_THROWS_AS(parse_valuation("Q2"), ParseError);
  CHECK_THROWS_AS(parse_valuation("Fp(3,t)@t^2+1-2"), ParseError);
  CHECK_THROWS_AS(parse_valuation("R@2"), ParseError);
}
