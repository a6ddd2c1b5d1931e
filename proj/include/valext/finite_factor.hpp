#pragma once

#include <random>
#include <utility>
#include <vector>

#include "valext/gf.hpp"
#include "valext/poly.hpp"

namespace valext {

using GFPoly = Poly<GF>;
using Factorization = std::vector<std::pair<GFPoly, int>>;

/// Canonical order of monic polynomials: degree, then coefficients from the
/// top coefficient down.
bool gfpoly_less(const GFPoly& a, const GFPoly& b);

/// Squarefree decomposition of a monic polynomial over F_q: pairs (s_i, i)
/// with f = prod s_i^i and each s_i squarefree.
Factorization squarefree_decomposition(const GFPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (g_d, d) with g_d the product of all irreducible factors of degree d.
std::vector<std::pair<GFPoly, int>> distinct_degree(const GFPoly& f);

/// Cantor-Zassenhaus equal-degree splitting of a squarefree product of
/// irreducibles of degree d.
std::vector<GFPoly> equal_degree(const GFPoly& f, int d, std::mt19937_64& rng);

/// Complete factorization over F_q into monic irreducibles with
/// multiplicities, sorted by gfpoly_less. Throws DomainError on zero input.
Factorization factor_finite(const GFPoly& f, std::mt19937_64& rng);
Factorization factor_finite(const GFPoly& f, unsigned long long seed = 0);

bool is_irreducible_finite(const GFPoly& f);

}  // namespace valext
