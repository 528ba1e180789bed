#pragma once

#include <vector>

#include "lcsq/abgroup.hpp"
#include "lcsq/ncpoly.hpp"
#include "lcsq/series.hpp"

namespace lcsq {
// Closed-form predictions for the series quotients, used standalone and as
// cross-checks against the engine.
namespace oracle {

// --- q-polynomial algebra, relation yx - q*xy, q != +-1 ---------------------

struct QPolyParams {
    Int q;
    int k = 1;
    int i = 0;
    int j = 0;
};

// Generator S of the diagonal cell lattice via the gcd recursion
//   S^k_{i,j} = gcd(S^{k-1}_{i-1,j} (q^j - 1), S^{k-1}_{i,j-1} (q^i - 1)),
// k = i+j. Nonnegative; must equal the closed form below.
Int qpoly_S_recursive(const Int& q, int k, int i, int j);

// |(q-1)^{k-2} (q^{gcd(i,j)} - 1)| for 2 <= k <= i+j, i,j >= 1.
Int qpoly_S_closed(const Int& q, int k, int i, int j);

// The case-split groups of the q-polynomial algebra.
AbGroup qpoly_group(const QPolyParams& p, Series s);

// Relation yx + xy (the q = -1 case), with its own parity case split.
AbGroup skew_group(int k, int i, int j, Series s);

struct WitnessCell {
    int k, i, j;
};

// A cell whose N_k torsion has order divisible by p, for any prime p not
// dividing q. Uses the multiplicative order of q mod p.
WitnessCell cor22_prime_witness(const Int& q, const Int& p);

// --- single homogeneous relation on two generators --------------------------

// Number s of distinct linear factors of the abelianized relation over C,
// computed exactly over Z as the degree of the squarefree part of the
// binary form. Throws std::invalid_argument when the abelianization is 0.
long distinct_linear_factors(const NcPoly& f);

// Rank of N_2[d]: 0 / d-1 / 2m-d-1 / m-s across the four degree ranges.
long n2_rank(const NcPoly& f, long d);

// Conjectural rank of N_3[d] for x^m + y^m: 3d-7 / 6m-3d+1 / 0. Every
// consumer must surface the flag; comparisons against it never gate.
struct ConjecturedRank {
    long value = 0;
    bool conjectural = true;
};
ConjecturedRank n3_rank_conjecture(int m, long d);

// --- graded ranks predicted by composition-series data ----------------------

// One irreducible summand F_j starting at degree d0: contributes graded
// dimension 1 in every total degree >= d0 + j.
struct JHSummand {
    int j = 1;
    int d0 = 1;
    int multiplicity = 1;
};

long jh_rank(const std::vector<JHSummand>& series, long d);

// Stored composition series of B_k for the relation x^m, m = 2..4, k = 2..4;
// nullptr outside that range.
const std::vector<JHSummand>* jh_series_Bk(int m, int k);

// F_1[1] + ... + F_1[m-1], predicting the ranks of N_2 for x^m.
std::vector<JHSummand> jh_series_N2(int m);

// --- free-algebra torsion count ----------------------------------------------

// Number of Z/3 summands in N_3 of the free algebra on n generators at the
// squarefree cell (1,...,1): C(n,5) + C(n,7) + C(n,9) + ...
Int torsion3_count(int n);

}  // namespace oracle
}  // namespace lcsq
