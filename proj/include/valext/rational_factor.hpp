#pragma once

#include <utility>
#include <vector>

#include "valext/poly.hpp"
#include "valext/rational.hpp"

namespace valext {

using QPoly = Poly<Rational>;

/// Squarefree decomposition over a field of characteristic zero (Yun).
std::vector<std::pair<QPoly, int>> squarefree_rational(const QPoly& f);

/// Factorization into monic irreducibles over Q with multiplicities, sorted
/// by degree then coefficients. Zassenhaus: factor modulo a good prime, lift
/// linearly, recombine subsets by exact trial division.
std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f);

bool is_irreducible_rational(const QPoly& f);

/// Monic integer polynomial D^n f(x/D) for monic f over Q, with D the least
/// common denominator of the coefficients of f.
QPoly integral_rescale(const QPoly& f, Integer& scale);

bool qpoly_less(const QPoly& a, const QPoly& b);

}  // namespace valext
