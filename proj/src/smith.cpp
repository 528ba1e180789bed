#include "lcsq/smith.hpp"

#include <algorithm>
#include <map>

namespace lcsq {

namespace {

// Diagonalization with divisibility fix-up, on a small dense matrix.
// Pivot choice: minimal absolute value in the working submatrix.
std::vector<Int> snf_dense(std::vector<std::vector<Int>> a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    size_t t = 0;
    std::vector<Int> diag;
    while (t < rows && t < cols) {
        // locate minimal nonzero entry of the submatrix
        size_t pi = t, pj = t;
        Int best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (best == 0 || int_abs(a[i][j]) < best)) {
                    best = int_abs(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(a[t], a[pi]);
        if (pj != t)
            for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
        if (a[t][t] < 0)
            for (size_t j = t; j < cols; ++j) a[t][j] = -a[t][j];

        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            Int q = int_fdiv(a[i][t], a[t][t]);
            for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) clean = false;  // remainder became the smaller pivot candidate
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            Int q = int_fdiv(a[t][j], a[t][t]);
            for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;

        // enforce divisibility of the remaining block
        bool fixed = true;
        for (size_t i = t + 1; i < rows && fixed; ++i)
            for (size_t j = t + 1; j < cols && fixed; ++j)
                if (!int_divisible(a[i][j], a[t][t])) {
                    for (size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                    fixed = false;
                }
        if (!fixed) continue;

        diag.push_back(a[t][t]);
        ++t;
    }
    return diag;
}

}  // namespace

std::vector<Int> smith_invariant_factors(const IntLattice& l) {
    // Hermite rows with pivot 1 contribute a trivial factor and can be
    // split off: their pivot column is zero in every other row, and column
    // operations clearing their tail touch no other row.
    std::vector<const RowVec*> keep;
    size_t ones = 0;
    for (const RowVec& r : l.basis()) {
        if (r.lead_coeff() == 1)
            ++ones;
        else
            keep.push_back(&r);
    }
    std::vector<Int> factors(ones, Int(1));
    if (!keep.empty()) {
        // compact to the columns actually hit
        std::map<int32_t, size_t> colmap;
        for (const RowVec* r : keep)
            r->for_each([&](int32_t j, const Int&) { colmap.emplace(j, 0); });
        size_t next = 0;
        for (auto& [j, idx] : colmap) idx = next++;
        std::vector<std::vector<Int>> dense(keep.size(), std::vector<Int>(next, Int(0)));
        for (size_t i = 0; i < keep.size(); ++i)
            keep[i]->for_each([&](int32_t j, const Int& c) { dense[i][colmap[j]] = c; });
        std::vector<Int> rest = snf_dense(std::move(dense));
        factors.insert(factors.end(), rest.begin(), rest.end());
    }
    return factors;
}

std::vector<Int> smith_invariant_factors(const IntMatrix& m) {
    return smith_invariant_factors(hermite_normal_form(m));
}

}  // namespace lcsq
