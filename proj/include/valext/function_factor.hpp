#pragma once

#include <utility>
#include <vector>

#include "valext/poly.hpp"
#include "valext/rat_func.hpp"

namespace valext {

using FPoly = Poly<RatFunc>;

/// Squarefree decomposition over F_p(t). Throws DomainError when a part is
/// inseparable (a polynomial in x^p).
std::vector<std::pair<FPoly, int>> squarefree_function_field(const FPoly& f);

/// Factorization into monic irreducibles over F_p(t): reduce modulo an
/// irreducible pi(t) with squarefree image, lift pi-adically, recombine.
std::vector<std::pair<FPoly, int>> factor_function_field(const FPoly& f);

bool is_irreducible_function_field(const FPoly& f);

/// D^n f(x/D) with D the monic lcm of the coefficient denominators; the
/// result is monic with coefficients in F_p[t].
FPoly integral_rescale(const FPoly& f, FpPoly& scale);

bool fpoly_less(const FPoly& a, const FPoly& b);

}  // namespace valext
