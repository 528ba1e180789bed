#include "test_oracles.hpp"

#include <numeric>

#include "lcsq/word.hpp"

namespace testutil {

using lcsq::enumerate_words;
using lcsq::enumerate_words_total;
using lcsq::GradingMode;
using lcsq::int_abs;
using lcsq::int_divexact;
using lcsq::int_gcd;
using lcsq::MultiDegree;
using lcsq::subdegrees;

long bareiss_rank(std::vector<std::vector<Int>> a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size();
    Int prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                a[i][j] = int_divexact(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<long>(r);
}

namespace {

std::vector<Word> words_of(int n, const Cell& cell) {
    return cell.mode == GradingMode::Multi ? enumerate_words(cell.md)
                                           : enumerate_words_total(n, static_cast<int>(cell.d));
}

std::vector<Cell> cells_below(int n, const Cell& cell, long min_total, long max_total) {
    std::vector<Cell> out;
    if (cell.mode == GradingMode::Multi) {
        for (const MultiDegree& sub : subdegrees(cell.md))
            if (sub.total() >= min_total && sub.total() <= max_total)
                out.push_back(Cell::multi(sub));
    } else {
        for (long e = min_total; e <= max_total; ++e) out.push_back(Cell::total(e));
    }
    return out;
}

Cell cell_minus(const Cell& cell, const Cell& sub) {
    if (cell.mode == GradingMode::Multi) return Cell::multi(cell.md - sub.md);
    return Cell::total(cell.total_degree() - sub.total_degree());
}

}  // namespace

std::vector<NcPoly> nested_commutators(int n, int k, const Cell& cell) {
    std::vector<NcPoly> out;
    if (k == 1) {
        for (const Word& w : words_of(n, cell)) out.push_back(NcPoly::monomial(w));
        return out;
    }
    if (cell.total_degree() < k) return out;
    for (const Cell& head : cells_below(n, cell, 1, cell.total_degree() - (k - 1))) {
        Cell rest = cell_minus(cell, head);
        std::vector<NcPoly> inner = nested_commutators(n, k - 1, rest);
        for (const Word& m : words_of(n, head)) {
            NcPoly mp = NcPoly::monomial(m);
            for (const NcPoly& q : inner) {
                NcPoly c = commutator(mp, q);
                if (!c.is_zero()) out.push_back(std::move(c));
            }
        }
    }
    return out;
}

std::vector<NcPoly> monomial_times_commutators(int n, int k, const Cell& cell) {
    std::vector<NcPoly> out;
    if (cell.total_degree() < k) return out;
    for (const Cell& head : cells_below(n, cell, 0, cell.total_degree() - k)) {
        Cell rest = cell_minus(cell, head);
        std::vector<NcPoly> inner = nested_commutators(n, k, rest);
        for (const Word& m : words_of(n, head)) {
            NcPoly mp = NcPoly::monomial(m);
            for (const NcPoly& q : inner) {
                NcPoly p = mp * q;
                if (!p.is_zero()) out.push_back(std::move(p));
            }
        }
    }
    return out;
}

long span_rank(const std::vector<NcPoly>& elems, int n, const Cell& cell) {
    CellBasis basis(n, cell);
    std::vector<std::vector<Int>> rows;
    for (const NcPoly& p : elems) {
        std::vector<Int> row(basis.dim(), Int(0));
        for (const auto& [w, c] : p.terms()) row[*basis.index(w)] = c;
        rows.push_back(std::move(row));
    }
    return bareiss_rank(std::move(rows));
}

namespace {

Int minor_det(const std::vector<std::vector<Int>>& a, const std::vector<int>& ri,
              const std::vector<int>& ci) {
    size_t k = ri.size();
    if (k == 1) return a[ri[0]][ci[0]];
    Int det = 0;
    std::vector<int> sub(ri.begin() + 1, ri.end());
    for (size_t t = 0; t < k; ++t) {
        std::vector<int> cols;
        for (size_t j = 0; j < k; ++j)
            if (j != t) cols.push_back(ci[j]);
        Int term = a[ri[0]][ci[t]] * minor_det(a, sub, cols);
        det += (t % 2 == 0) ? term : -term;
    }
    return det;
}

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<Int> determinant_divisor_factors(const std::vector<std::vector<Int>>& a) {
    std::vector<Int> factors;
    if (a.empty() || a[0].empty()) return factors;
    int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
    Int prev = 1;
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<int>> rsel, csel;
        combinations(rows, k, rsel);
        combinations(cols, k, csel);
        Int dk = 0;
        for (const auto& ri : rsel)
            for (const auto& ci : csel) dk = int_gcd(dk, minor_det(a, ri, ci));
        if (dk == 0) break;  // rank reached
        factors.push_back(int_divexact(int_abs(dk), prev));
        prev = int_abs(dk);
    }
    return factors;
}

std::vector<std::vector<Int>> random_matrix(std::mt19937& rng, int max_rows, int max_cols,
                                            int max_abs) {
    std::uniform_int_distribution<int> rdist(1, max_rows), cdist(1, max_cols),
        vdist(-max_abs, max_abs);
    int rows = rdist(rng), cols = cdist(rng);
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (auto& row : a)
        for (Int& v : row) v = vdist(rng);
    return a;
}

NcPoly random_poly(std::mt19937& rng, int n, int maxlen, int terms) {
    std::uniform_int_distribution<int> len(0, maxlen), letter(0, n - 1), coeff(-4, 4);
    NcPoly p;
    for (int t = 0; t < terms; ++t) {
        std::vector<int32_t> letters(len(rng));
        for (auto& l : letters) l = letter(rng);
        p.add_term(Word{std::move(letters)}, coeff(rng));
    }
    return p;
}

}  // namespace testutil
