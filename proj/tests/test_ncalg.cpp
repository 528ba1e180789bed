#include <doctest.h>

#include <random>

#include "lcsq/parser.hpp"
#include "lcsq/presentation.hpp"
#include "test_oracles.hpp"

using namespace lcsq;

namespace {

Word W(std::vector<int32_t> l) { return Word{std::move(l)}; }

NcPoly x() { return NcPoly::generator(0); }
NcPoly y() { return NcPoly::generator(1); }

}  // namespace

TEST_CASE("word enumeration by multidegree") {
    auto ws = enumerate_words(MultiDegree{{1, 1}});
    REQUIRE(ws.size() == 2);
    CHECK(ws[0] == W({0, 1}));
    CHECK(ws[1] == W({1, 0}));

    auto unit = enumerate_words(MultiDegree{{0, 0, 0}});
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].is_unit());

    MultiDegree big{{1, 1, 1, 2, 3}};
    auto all = enumerate_words(big);
    CHECK(all.size() == 3360);
    CHECK(multinomial(big) == 3360);

    // lex order, distinct, every word of the right multidegree
    for (size_t i = 0; i + 1 < all.size(); ++i)
        CHECK(all[i].letters() < all[i + 1].letters());
    for (size_t i = 0; i < all.size(); i += 97)
        CHECK(all[i].multidegree(5) == big);
}

TEST_CASE("word enumeration by total degree") {
    auto ws = enumerate_words_total(2, 2);
    REQUIRE(ws.size() == 4);
    CHECK(ws[0] == W({0, 0}));
    CHECK(ws[1] == W({0, 1}));
    CHECK(ws[2] == W({1, 0}));
    CHECK(ws[3] == W({1, 1}));

    CHECK(enumerate_words_total(2, 0).size() == 1);
    CHECK(enumerate_words_total(3, 3).size() == 27);
}

TEST_CASE("polynomial product and commutator") {
    CHECK(x() * y() == NcPoly::monomial(W({0, 1})));

    NcPoly lhs = (x() + y()) * (x() - y());
    NcPoly expect;
    expect.add_term(W({0, 0}), 1);
    expect.add_term(W({0, 1}), -1);
    expect.add_term(W({1, 0}), 1);
    expect.add_term(W({1, 1}), -1);
    CHECK(lhs == expect);

    NcPoly p = lhs + x() * 3;
    CHECK(p * NcPoly::unit() == p);

    CHECK(commutator(x(), y()) == x() * y() - y() * x());
    CHECK(commutator(p, p).is_zero());

    // [x,[x,y]] = xxy - 2xyx + yxx
    NcPoly nested = commutator(x(), commutator(x(), y()));
    NcPoly expect2;
    expect2.add_term(W({0, 0, 1}), 1);
    expect2.add_term(W({0, 1, 0}), -2);
    expect2.add_term(W({1, 0, 0}), 1);
    CHECK(nested == expect2);
}

TEST_CASE("Leibniz and Jacobi identities on random polynomials") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        NcPoly p = testutil::random_poly(rng, 2, 3, 3);
        NcPoly q = testutil::random_poly(rng, 2, 3, 3);
        NcPoly r = testutil::random_poly(rng, 2, 3, 3);
        CHECK(commutator(p, q * r) == q * commutator(p, r) + commutator(p, q) * r);
        CHECK((commutator(commutator(p, q), r) + commutator(commutator(q, r), p) +
               commutator(commutator(r, p), q))
                  .is_zero());
    }
}

TEST_CASE("parser accepts the relation grammar") {
    NcPoly p = parse_poly("y*x - 3*x*y", 2);
    NcPoly expect;
    expect.add_term(W({1, 0}), 1);
    expect.add_term(W({0, 1}), -3);
    CHECK(p == expect);

    CHECK(parse_poly("x^3 + y^3", 2) == x() * x() * x() + y() * y() * y());
    CHECK(parse_poly("x*y*x", 2) == NcPoly::monomial(W({0, 1, 0})));
    CHECK(parse_poly("-x + 2", 2) == NcPoly::unit() * 2 - x());
    CHECK(parse_poly("0", 2).is_zero());
    CHECK(parse_poly("2*x^2*y", 2) == x() * x() * y() * 2);
    CHECK(parse_poly("x3", 5) == NcPoly::generator(2));

    // noncommutative order preserved
    CHECK(parse_poly("x*y", 2) != parse_poly("y*x", 2));
}

TEST_CASE("parser rejects bad input with positions") {
    CHECK_THROWS_AS(parse_poly("", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x + ", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("3x", 2), ParseError);      // juxtaposition needs '*'
    CHECK_THROWS_AS(parse_poly("x y", 2), ParseError);     // missing operator
    CHECK_THROWS_AS(parse_poly("2*3", 2), ParseError);     // integer is not a factor
    CHECK_THROWS_AS(parse_poly("x^0", 2), ParseError);     // exponent below 1
    CHECK_THROWS_AS(parse_poly("z", 2), ParseError);       // unknown variable
    CHECK_THROWS_AS(parse_poly("x2", 2), ParseError);      // indexed names need n >= 5
    CHECK_THROWS_AS(parse_poly("y", 5), ParseError);       // letter names need n <= 4
    CHECK_THROWS_AS(parse_poly("x9", 5), ParseError);      // index out of range

    try {
        parse_poly("x + @", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("render round-trips through the parser") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        NcPoly p = testutil::random_poly(rng, n, 4, 4);
        CHECK(parse_poly(p.render(n), n) == p);
    }
    CHECK(parse_poly(NcPoly::zero().render(2), 2).is_zero());
}

TEST_CASE("homogeneity queries") {
    CHECK(parse_poly("x^3 + y^3", 2).homogeneous_degree() == 3);
    CHECK(!parse_poly("x^3 + y^3", 2).multihomogeneous_degree(2).has_value());
    CHECK(parse_poly("y*x - 3*x*y", 2).multihomogeneous_degree(2) == MultiDegree{{1, 1}});
    CHECK(!parse_poly("x + y^2", 2).homogeneous_degree().has_value());
}

TEST_CASE("presentation validation") {
    CHECK_NOTHROW(Presentation::free_algebra(3));
    CHECK_NOTHROW(Presentation(2, parse_poly("x^3", 2), GradingMode::Multi));
    CHECK_NOTHROW(Presentation(2, parse_poly("x^2 + y^2", 2), GradingMode::Total));
    CHECK_THROWS_AS(Presentation(2, parse_poly("x^2 + y^2", 2), GradingMode::Multi), GradingError);
    CHECK_THROWS_AS(Presentation(2, parse_poly("x + y^2", 2), GradingMode::Total),
                    std::invalid_argument);
    CHECK_THROWS_AS(Presentation(2, parse_poly("7", 2), GradingMode::Total), std::invalid_argument);
    CHECK_THROWS_AS(Presentation(0, std::nullopt, GradingMode::Multi), std::invalid_argument);

    CHECK(auto_grading(parse_poly("x^2+y^2", 2), 2) == GradingMode::Total);
    CHECK(auto_grading(parse_poly("y*x+x*y", 2), 2) == GradingMode::Multi);
    CHECK(auto_grading(std::nullopt, 2) == GradingMode::Multi);

    Presentation p(2, parse_poly("x^3", 2), GradingMode::Multi);
    CHECK(p.relation_degree() == 3);
    CHECK(p.relation_multidegree() == MultiDegree{{3, 0}});
    CHECK(p.fingerprint() == "n=2;grading=multi;f=x^3");
}
