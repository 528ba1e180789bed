#pragma once

// Independent reference implementations used only by tests. They share no
// code with the engine paths they check: rank is computed by fraction-free
// elimination, spans by direct enumeration of nested commutators, Smith
// factors by determinantal divisors.

#include <random>
#include <vector>

#include "lcsq/cell.hpp"
#include "lcsq/ncpoly.hpp"

namespace testutil {

using lcsq::Cell;
using lcsq::CellBasis;
using lcsq::Int;
using lcsq::NcPoly;
using lcsq::Word;

// Rank over Q of a dense integer matrix (Bareiss fraction-free elimination).
long bareiss_rank(std::vector<std::vector<Int>> a);

// All monomials of each positive degree composition summing to the cell,
// nested right: [m1,[m2,...,[m_{k-1},m_k]]]; with an optional left monomial
// factor for the ideal versions.
std::vector<NcPoly> nested_commutators(int n, int k, const Cell& cell);
// m0 * c with m0 any monomial (unit included) and c a nested commutator.
std::vector<NcPoly> monomial_times_commutators(int n, int k, const Cell& cell);

// Rank of the span of the given cell elements, via bareiss_rank.
long span_rank(const std::vector<NcPoly>& elems, int n, const Cell& cell);

// Nonzero invariant factors from determinantal divisors: d_k = D_k/D_{k-1},
// D_k = gcd of all k x k minors.
std::vector<Int> determinant_divisor_factors(const std::vector<std::vector<Int>>& a);

std::vector<std::vector<Int>> random_matrix(std::mt19937& rng, int max_rows, int max_cols,
                                            int max_abs);

// Random polynomial with small support in the first n generators, each word
// of length <= maxlen, coefficients in [-4, 4].
NcPoly random_poly(std::mt19937& rng, int n, int maxlen, int terms);

}  // namespace testutil
