#pragma once

#include <memory>
#include <mutex>

#include "lcsq/abgroup.hpp"
#include "lcsq/cell.hpp"

namespace lcsq {

enum class Series { B, N };

inline const char* to_string(Series s) { return s == Series::B ? "B" : "N"; }

struct SeriesQuery {
    Presentation pres;
    Series series;
    int k;
    Cell cell;
};

struct GroupReport {
    SeriesQuery query;
    AbGroup group;
    int32_t cell_dim = 0;
    // diagnostics
    int64_t upper_rows = 0;  // spanning rows generated for the numerator
    int64_t lower_rows = 0;  // and for the denominator
    int64_t ms = 0;
};

// Computes graded pieces of the lower central series L_k, the ideals
// M_k = A.L_k, and the relation ideal of a presentation, all as lattices of
// the corresponding free-algebra cell, and takes their successive quotients
//
//   B_k = (L_k + I)/(L_{k+1} + I),   N_k = (M_k + I)/(M_{k+1} + I).
//
// All lattices are memoized per (k, cell); the memo holds immutable values
// behind a mutex, so cells may be computed from many threads at once.
class SeriesEngine {
public:
    explicit SeriesEngine(Presentation pres);

    const Presentation& presentation() const { return pres_; }

    std::shared_ptr<const CellBasis> basis(const Cell& cell);

    // L_1 = A, L_{k+1} = [A, L_k]; spanning rows [m, s] with m a monomial of
    // every positive subdegree and s a Hermite basis row one level down.
    std::shared_ptr<const IntLattice> span_L(int k, const Cell& cell);
    // M_k = A.L_k; spanning rows m*s with m of every subdegree including 0.
    std::shared_ptr<const IntLattice> span_M(int k, const Cell& cell);
    // Two-sided ideal of the relation: rows w1*f*w2.
    std::shared_ptr<const IntLattice> span_ideal(const Cell& cell);
    // S_k + ideal, S per series.
    IntLattice span_sum(Series s, int k, const Cell& cell);

    GroupReport quotient_structure(Series s, int k, const Cell& cell);
    GroupReport quotient_structure(const SeriesQuery& q) {
        return quotient_structure(q.series, q.k, q.cell);
    }

    // Reports for every cell of total degree <= max_total_degree, in cell
    // order, computed with the given number of worker threads.
    std::vector<GroupReport> sweep(Series s, int k, long max_total_degree, int jobs = 1);

    std::vector<Cell> cells_up_to(long max_total_degree) const;
    // The engine's cell for a homogeneous polynomial (multidegree cell when
    // the grading is multi). Throws std::invalid_argument for inhomogeneous p.
    Cell cell_of(const NcPoly& p) const;

    enum class Target { L, M, Ideal, Sum };  // Sum = M_k + ideal
    bool member(const NcPoly& p, Target target, int k);

    // Spanning rows generated for a memoized lattice (diagnostics).
    int64_t generated_rows(const std::string& memo_key) const;

private:
    std::shared_ptr<const IntLattice> memo_get(
        const std::unordered_map<std::string, std::shared_ptr<const IntLattice>>& map,
        const std::string& key);
    std::shared_ptr<const IntLattice> memo_put(
        std::unordered_map<std::string, std::shared_ptr<const IntLattice>>& map,
        const std::string& key, IntLattice value, int64_t rows_generated);

    std::vector<Cell> proper_subcells(const Cell& cell, long min_total, long max_total) const;
    RowVec poly_to_row(const NcPoly& p, const CellBasis& cb) const;

    Presentation pres_;
    mutable std::mutex mu_;
    std::unordered_map<std::string, std::shared_ptr<const CellBasis>> bases_;
    std::unordered_map<std::string, std::shared_ptr<const IntLattice>> lmemo_, mmemo_, imemo_;
    std::unordered_map<std::string, int64_t> rowstats_;
};

}  // namespace lcsq
