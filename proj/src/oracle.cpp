#include "lcsq/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace lcsq {
namespace oracle {

namespace {

void require_generic_q(const Int& q) {
    if (q == 1 || q == -1)
        throw std::invalid_argument("q must differ from 1 and -1 for the generic formulas");
}

Int q_power_minus_one(const Int& q, unsigned long e) { return int_pow(q, e) - 1; }

}  // namespace

Int qpoly_S_recursive(const Int& q, int k, int i, int j) {
    require_generic_q(q);
    if (i < 1 || j < 1 || k != i + j || k < 2)
        throw std::invalid_argument("recursion is defined on the diagonal k = i+j with i,j >= 1");

    // S of the cell one level down; 1 in degree one, 0 on an axis above it
    auto prev = [&](int pi, int pj) -> Int {
        if (pi + pj == 1) return 1;
        if (pi < 1 || pj < 1) return 0;
        return qpoly_S_recursive(q, pi + pj, pi, pj);
    };
    Int left = prev(i - 1, j) * q_power_minus_one(q, static_cast<unsigned long>(j));
    Int right = prev(i, j - 1) * q_power_minus_one(q, static_cast<unsigned long>(i));
    return int_gcd(left, right);
}

Int qpoly_S_closed(const Int& q, int k, int i, int j) {
    require_generic_q(q);
    if (i < 1 || j < 1 || k < 2 || k > i + j)
        throw std::invalid_argument("closed form requires 2 <= k <= i+j and i,j >= 1");
    unsigned long g = std::gcd(static_cast<unsigned long>(i), static_cast<unsigned long>(j));
    Int v = int_pow(q - 1, static_cast<unsigned long>(k - 2)) * q_power_minus_one(q, g);
    return int_abs(v);
}

AbGroup qpoly_group(const QPolyParams& p, Series s) {
    require_generic_q(p.q);
    if (p.k < 2) throw std::invalid_argument("group formulas require k >= 2");
    if (p.i < 0 || p.j < 0) throw std::invalid_argument("cell indices must be non-negative");
    const int sum = p.i + p.j;
    if (p.i == 0 || p.j == 0) return AbGroup::trivial();
    unsigned long g = std::gcd(static_cast<unsigned long>(p.i), static_cast<unsigned long>(p.j));
    if (s == Series::B) {
        if (p.k < sum) return AbGroup::cyclic(p.q - 1);
        if (p.k == sum) return AbGroup::free(1);
        return AbGroup::trivial();
    }
    if (p.k < sum - 1) return AbGroup::cyclic(p.q - 1);
    if (p.k == sum - 1) return AbGroup::cyclic(q_power_minus_one(p.q, g));
    if (p.k == sum) return AbGroup::free(1);
    return AbGroup::trivial();
}

AbGroup skew_group(int k, int i, int j, Series s) {
    if (k < 2) throw std::invalid_argument("group formulas require k >= 2");
    if (i < 0 || j < 0) throw std::invalid_argument("cell indices must be non-negative");
    if (i == 0 || j == 0) return AbGroup::trivial();
    const int sum = i + j;
    const bool both_even = (i % 2 == 0) && (j % 2 == 0);
    if (s == Series::B) {
        if (both_even) return AbGroup::trivial();
        if (sum > k) return AbGroup::cyclic(2);
        if (sum == k) return AbGroup::free(1);
        return AbGroup::trivial();
    }
    if (!both_even) {
        if (sum > k) return AbGroup::cyclic(2);
        if (sum == k) return AbGroup::free(1);
        return AbGroup::trivial();
    }
    if (sum > k + 1) return AbGroup::cyclic(2);
    if (sum == k + 1) return AbGroup::free(1);
    return AbGroup::trivial();
}

WitnessCell cor22_prime_witness(const Int& q, const Int& p) {
    require_generic_q(q);
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("p must be prime");
    Int qm;
    mpz_mod(qm.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    if (qm == 0) throw std::invalid_argument("p divides q; no such cell exists");
    // multiplicative order of q mod p
    long e = 1;
    Int t = qm;
    while (t != 1) {
        t = t * qm;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    if (e == 1) return WitnessCell{2, 2, 2};  // p | q-1, any k < i+j-1 cell
    int ei = static_cast<int>(e);
    return WitnessCell{2 * ei - 1, ei, ei};  // k = i+j-1, p | q^gcd(i,j) - 1
}

// ---- univariate Z[t] helpers for the squarefree-part computation -----------

namespace {

using UiPoly = std::vector<Int>;  // coefficient of t^i at index i; no trailing zeros

void trim(UiPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long degree(const UiPoly& p) { return static_cast<long>(p.size()) - 1; }

UiPoly derivative(const UiPoly& p) {
    UiPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

Int content(const UiPoly& p) {
    Int c = 0;
    for (const Int& a : p) c = int_gcd(c, a);
    return c;
}

UiPoly primitive_part(UiPoly p) {
    Int c = content(p);
    if (c > 1)
        for (Int& a : p) a = int_divexact(a, c);
    return p;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
UiPoly pseudo_rem(UiPoly a, const UiPoly& b) {
    long db = degree(b);
    const Int& lb = b.back();
    while (degree(a) >= db) {
        long shift = degree(a) - db;
        Int la = a.back();
        for (Int& c : a) c *= lb;
        for (long i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

UiPoly gcd_primitive(UiPoly a, UiPoly b) {
    trim(a);
    trim(b);
    if (a.empty()) return primitive_part(std::move(b));
    if (b.empty()) return primitive_part(std::move(a));
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty()) {
        UiPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_part(std::move(r));
    }
    if (!a.empty() && a.back() < 0)
        for (Int& c : a) c = -c;
    return a;
}

}  // namespace

long distinct_linear_factors(const NcPoly& f) {
    auto m = f.homogeneous_degree();
    if (!m || *m < 1) throw std::invalid_argument("relation must be homogeneous of positive degree");
    for (const auto& [w, c] : f.terms())
        for (int32_t l : w.letters())
            if (l > 1)
                throw std::invalid_argument("the rank formula applies to two-generator relations");

    // binary form coefficients: index = x-degree
    UiPoly p(static_cast<size_t>(*m) + 1, Int(0));
    for (const auto& [w, c] : f.terms()) {
        long xdeg = 0;
        for (int32_t l : w.letters())
            if (l == 0) ++xdeg;
        p[xdeg] += c;
    }
    trim(p);
    if (p.empty())
        throw std::invalid_argument(
            "abelianization of the relation vanishes; the rank formula does not apply");

    long dp = degree(p);
    long s = (dp < *m) ? 1 : 0;  // root at infinity: the factor y
    if (dp > 0) {
        UiPoly g = gcd_primitive(p, derivative(p));
        s += dp - degree(g);
    }
    return s;
}

long n2_rank(const NcPoly& f, long d) {
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    long s = distinct_linear_factors(f);
    long m = *f.homogeneous_degree();
    if (d == 0) return 0;
    if (d <= m - 1) return d - 1;
    if (d <= m + s - 1) return 2 * m - d - 1;
    return m - s;
}

ConjecturedRank n3_rank_conjecture(int m, long d) {
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    if (d >= 3 && d <= m + 1) return {3 * d - 7, true};
    if (d >= m + 2 && d <= 2 * m) return {6 * m - 3 * d + 1, true};
    return {0, true};
}

long jh_rank(const std::vector<JHSummand>& series, long d) {
    long r = 0;
    for (const JHSummand& s : series)
        if (s.d0 + s.j <= d) r += s.multiplicity;
    return r;
}

const std::vector<JHSummand>* jh_series_Bk(int m, int k) {
    // transcribed composition series of B_k for the relation x^m
    static const std::vector<JHSummand> tables[3][3] = {
        // m = 2
        {{{1, 1, 1}},
         {{1, 2, 1}, {2, 1, 1}},
         {{2, 2, 1}, {3, 1, 1}, {3, 2, 1}}},
        // m = 3
        {{{1, 1, 1}, {1, 2, 1}},
         {{1, 2, 1}, {1, 3, 1}, {2, 1, 1}, {2, 2, 1}},
         {{1, 3, 1}, {2, 2, 1}, {2, 3, 2}, {3, 1, 1}, {3, 2, 2}, {3, 3, 1}}},
        // m = 4
        {{{1, 1, 1}, {1, 2, 1}, {1, 3, 1}},
         {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 1, 1}, {2, 2, 1}, {2, 3, 1}},
         {{1, 3, 1},
          {1, 4, 1},
          {2, 2, 1},
          {2, 3, 2},
          {2, 4, 2},
          {3, 1, 1},
          {3, 2, 2},
          {3, 3, 2},
          {3, 4, 1}}},
    };
    if (m < 2 || m > 4 || k < 2 || k > 4) return nullptr;
    return &tables[m - 2][k - 2];
}

std::vector<JHSummand> jh_series_N2(int m) {
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    std::vector<JHSummand> s;
    for (int d0 = 1; d0 <= m - 1; ++d0) s.push_back({1, d0, 1});
    return s;
}

Int torsion3_count(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    Int total = 0;
    for (int t = 5; t <= n; t += 2)
        total += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(t));
    return total;
}

}  // namespace oracle
}  // namespace lcsq
