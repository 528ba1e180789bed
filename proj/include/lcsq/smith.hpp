#pragma once

#include <vector>

#include "lcsq/lattice.hpp"

namespace lcsq {

// Nonzero invariant factors d_1 | d_2 | ... | d_r of the matrix, r = rank.
// Determined by the row span alone.
std::vector<Int> smith_invariant_factors(const IntMatrix& m);
std::vector<Int> smith_invariant_factors(const IntLattice& l);

}  // namespace lcsq
