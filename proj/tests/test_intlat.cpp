#include <doctest.h>

#include <random>
#include <set>

#include "lcsq/abgroup.hpp"
#include "test_oracles.hpp"

using namespace lcsq;

namespace {

IntMatrix mat(std::vector<std::vector<Int>> rows, int cols) {
    return IntMatrix::from_dense(rows, cols);
}

std::vector<std::vector<Int>> dense_basis(const IntLattice& l) {
    std::vector<std::vector<Int>> out;
    for (const RowVec& r : l.basis()) out.push_back(r.dense());
    return out;
}

}  // namespace

TEST_CASE("row vector arithmetic across both storages") {
    // small dim stays sparse, large dim with heavy fill goes dense
    RowVec a = RowVec::from_pairs(6, {{0, 2}, {3, -1}});
    RowVec b = RowVec::from_pairs(6, {{0, 1}, {2, 4}});
    RowVec c = RowVec::linear_comb(1, a, 2, b);
    CHECK(c.dense() == std::vector<Int>{4, 0, 8, -1, 0, 0});
    CHECK(c.lead() == 0);
    CHECK(c.nnz() == 3);

    RowVec z = RowVec::linear_comb(1, a, -1, a);
    CHECK(z.is_zero());
    CHECK(z.lead() == -1);

    // duplicate pairs merge, zeros drop
    RowVec m = RowVec::from_pairs(4, {{1, 3}, {1, -3}, {2, 5}});
    CHECK(m.dense() == std::vector<Int>{0, 0, 5, 0});

    std::vector<Int> big(256, Int(0));
    for (int i = 0; i < 200; ++i) big[i] = i + 1;
    RowVec d = RowVec::from_dense(big);
    CHECK(d.nnz() == 200);
    CHECK(d.coeff(10) == 11);
    RowVec e = RowVec::linear_comb(2, d, 1, RowVec::unit(256, 0, -2));
    CHECK(e.coeff(0) == 0);
    CHECK(e.lead() == 1);
}

TEST_CASE("hermite normal form examples") {
    IntLattice l = hermite_normal_form(mat({{2, 4}, {6, 8}}, 2));
    CHECK(dense_basis(l) == std::vector<std::vector<Int>>{{2, 0}, {0, 4}});

    CHECK(hermite_normal_form(IntMatrix(2)).rank() == 0);

    IntLattice swap = hermite_normal_form(mat({{0, 1}, {1, 0}}, 2));
    CHECK(dense_basis(swap) == std::vector<std::vector<Int>>{{1, 0}, {0, 1}});
}

TEST_CASE("hermite form is canonical and span-preserving") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        auto rows = testutil::random_matrix(rng, 4, 5, 9);
        IntMatrix m = mat(rows, static_cast<int>(rows[0].size()));
        IntLattice l = hermite_normal_form(m);

        // every input row lies in the span
        for (size_t i = 0; i < m.row_count(); ++i) CHECK(l.contains(m.row(i)));

        // idempotence on the basis
        IntMatrix basis(m.cols());
        for (const RowVec& r : l.basis()) basis.add_row(r);
        CHECK(hermite_normal_form(basis) == l);

        // rank agrees with fraction-free elimination
        CHECK(l.rank() == testutil::bareiss_rank(rows));

        // HNF shape: increasing pivots, positive, entries above reduced
        for (int i = 0; i < l.rank(); ++i) {
            const RowVec& r = l.basis()[i];
            CHECK(r.lead_coeff() > 0);
            if (i > 0) CHECK(r.lead() > l.basis()[i - 1].lead());
            for (int k2 = 0; k2 < i; ++k2) {
                Int above = l.basis()[k2].coeff(r.lead());
                CHECK(above >= 0);
                CHECK(above < r.lead_coeff());
            }
        }
    }
}

TEST_CASE("coordinates in a lattice") {
    IntLattice l = hermite_normal_form(mat({{2, 0}, {0, 4}}, 2));
    auto c = l.coords(RowVec::from_dense({Int(4), Int(8)}));
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<Int>{2, 2});

    IntLattice half = hermite_normal_form(mat({{2, 0}}, 2));
    CHECK(!half.coords(RowVec::from_dense({Int(1), Int(0)})).has_value());
    CHECK(!half.coords(RowVec::from_dense({Int(2), Int(1)})).has_value());

    IntLattice full = IntLattice::full(2);
    auto id = full.coords(RowVec::from_dense({Int(-7), Int(3)}));
    REQUIRE(id.has_value());
    CHECK(*id == std::vector<Int>{-7, 3});
}

TEST_CASE("lattice sums") {
    IntLattice a = hermite_normal_form(mat({{2, 0}}, 2));
    IntLattice b = hermite_normal_form(mat({{0, 2}}, 2));
    CHECK(dense_basis(lattice_sum(a, b)) == std::vector<std::vector<Int>>{{2, 0}, {0, 2}});

    CHECK(lattice_sum(a, IntLattice(2)) == a);

    IntLattice c = hermite_normal_form(mat({{3, 0}}, 2));
    CHECK(dense_basis(lattice_sum(a, c)) == std::vector<std::vector<Int>>{{1, 0}});

    CHECK_THROWS_AS(lattice_sum(a, IntLattice(3)), std::invalid_argument);
}

TEST_CASE("smith invariant factor examples") {
    CHECK(smith_invariant_factors(mat({{2, 0}, {0, 3}}, 2)) == std::vector<Int>{1, 6});
    CHECK(smith_invariant_factors(mat({{2, 4}, {6, 8}}, 2)) == std::vector<Int>{2, 4});
    CHECK(smith_invariant_factors(mat({{0, 0}, {0, 0}}, 2)).empty());
}

TEST_CASE("smith factors match determinantal divisors on random matrices") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        auto rows = testutil::random_matrix(rng, 4, 5, 9);
        auto expected = testutil::determinant_divisor_factors(rows);
        auto got = smith_invariant_factors(mat(rows, static_cast<int>(rows[0].size())));
        CHECK(got == expected);
        for (size_t i = 1; i < got.size(); ++i) CHECK(int_divisible(got[i], got[i - 1]));
    }
}

TEST_CASE("lattice quotient examples") {
    IntLattice z2 = IntLattice::full(2);
    IntLattice v = hermite_normal_form(mat({{2, 0}, {0, 3}}, 2));
    AbGroup q = lattice_quotient(z2, v);
    CHECK(q.rank() == 0);
    CHECK(q.invariant_factors() == std::vector<Int>{6});

    AbGroup freepart = lattice_quotient(hermite_normal_form(mat({{1, 0}}, 2)), IntLattice(2));
    CHECK(freepart == AbGroup::free(1));

    IntLattice u = hermite_normal_form(mat({{2, 4}, {0, 8}}, 2));
    IntLattice w = hermite_normal_form(mat({{4, 8}}, 2));
    AbGroup g = lattice_quotient(u, w);
    CHECK(g.rank() == 1);
    CHECK(g.invariant_factors() == std::vector<Int>{2});

    // brute-force the torsion order of the same quotient over a coset box:
    // elements a*(2,4) + b*(0,8); the denominator is (4,8) = 2*(2,4), so a
    // class has finite order iff some positive multiple lands in it
    {
        std::set<std::pair<int, int>> torsion_classes;
        for (int a = -6; a <= 6; ++a)
            for (int b = -6; b <= 6; ++b) {
                bool finite_order = false;
                for (int t = 1; t <= 8 && !finite_order; ++t)
                    // t*(2a, 4a+8b) = c*(4,8) needs 2ta = 4c and 4ta+8tb = 8c
                    if ((t * a) % 2 == 0 && t * b == 0) finite_order = true;
                if (finite_order) torsion_classes.insert({((a % 2) + 2) % 2, b});
            }
        // classes with b != 0 never have finite order, so the set is {a mod 2}
        CHECK(torsion_classes.size() == g.torsion_order());
    }

    CHECK(lattice_quotient(u, u).is_trivial());
    CHECK(lattice_quotient(u, IntLattice(2)) == AbGroup::free(2));

    CHECK_THROWS_AS(lattice_quotient(w, u), ContainmentViolation);
}

TEST_CASE("abelian group formatting and sums") {
    AbGroup g(2, {Int(2), Int(6)});
    CHECK(g.format() == "Z^2 + Z/2 + Z/6");
    CHECK(g.format_primes() == "Z^2 + (Z/2)^2 + Z/3");
    CHECK(g.torsion_order() == 12);
    CHECK(AbGroup::trivial().format() == "0");
    CHECK(AbGroup::cyclic(1).is_trivial());
    CHECK(AbGroup::cyclic(-5) == AbGroup(0, {Int(5)}));

    CHECK_THROWS_AS(AbGroup(0, {Int(2), Int(3)}), std::invalid_argument);
    CHECK_THROWS_AS(AbGroup(0, {Int(1)}), std::invalid_argument);

    AbGroup s = direct_sum(AbGroup::cyclic(2), AbGroup::cyclic(3));
    CHECK(s == AbGroup(0, {Int(6)}));
    AbGroup s2 = direct_sum(AbGroup(1, {Int(4)}), AbGroup(0, {Int(2), Int(6)}));
    CHECK(s2.rank() == 1);
    CHECK(s2.invariant_factors() == std::vector<Int>{2, 2, 12});
}
