#pragma once

#include <string>
#include <vector>

#include "lcsq/smith.hpp"

namespace lcsq {

// Finitely generated abelian group: free rank plus invariant factors
// d_1 | d_2 | ... with every d_i >= 2.
class AbGroup {
public:
    AbGroup() = default;
    AbGroup(long rank, std::vector<Int> invariant_factors);

    static AbGroup trivial() { return AbGroup{}; }
    static AbGroup free(long rank) { return AbGroup(rank, {}); }
    // Z/d; trivial for |d| <= 1.
    static AbGroup cyclic(const Int& d);

    long rank() const { return rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }

    bool is_trivial() const { return rank_ == 0 && factors_.empty(); }
    bool torsion_free() const { return factors_.empty(); }
    Int torsion_order() const;

    // "Z^2 + Z/6", invariant-factor form.
    std::string format() const;
    // "Z^2 + Z/2 + Z/3" with repeated prime powers collected as "(Z/3)^2".
    std::string format_primes() const;

    bool operator==(const AbGroup&) const = default;

private:
    long rank_ = 0;
    std::vector<Int> factors_;
};

AbGroup direct_sum(const AbGroup& a, const AbGroup& b);

// Structure of U/V for nested lattices V <= U of equal ambient dimension.
// Throws ContainmentViolation when some basis row of V is outside U.
AbGroup lattice_quotient(const IntLattice& u, const IntLattice& v);

// Prime factorization p -> exponent, by trial division.
std::vector<std::pair<Int, unsigned>> factorize(Int n);

}  // namespace lcsq
