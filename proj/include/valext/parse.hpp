#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "valext/fp_poly.hpp"
#include "valext/function_factor.hpp"
#include "valext/rational_factor.hpp"

namespace valext {

/// Integer polynomial in x and t as a map (deg_x, deg_t) -> coefficient.
using IntPoly2 = std::map<std::pair<int, int>, Integer>;

/// Parse the polynomial grammar: integer literals, variables x and t,
/// binary + - *, unary -, ^ with a non-negative integer exponent,
/// parentheses. Whitespace is ignored. Throws ParseError.
IntPoly2 parse_polynomial(const std::string& text);

QPoly to_rational_poly(const IntPoly2& p);
FPoly to_function_poly(const IntPoly2& p, std::uint64_t prime);
FpPoly to_fp_poly(const IntPoly2& p, std::uint64_t prime);  // univariate in t

struct ValuationDescriptor {
  enum class Base { Rationals, FunctionField } base = Base::Rationals;
  std::uint64_t p = 2;      // the prime (Q) or the characteristic
  bool infinite = false;    // the place 1/t
  FpPoly place{2};          // monic irreducible pi(t) for finite places of F_p(t)
  std::string text;
};

/// `Q@p`, `Fp(p,t)@<poly in t>`, `Fp(p,t)@inf`.
ValuationDescriptor parse_valuation(const std::string& text);

}  // namespace valext
