#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcsq/ints.hpp"

namespace lcsq {

// Row of an integer matrix. Stored as sorted (column, coefficient) pairs
// while sparse; rows whose fill exceeds a quarter of the ambient dimension
// are switched to dense storage for the rest of their life.
class RowVec {
public:
    explicit RowVec(int32_t dim) : dim_(dim) {}

    static RowVec unit(int32_t dim, int32_t col, Int c = 1);
    // Unsorted pairs allowed; duplicates are merged, zeros dropped.
    static RowVec from_pairs(int32_t dim, std::vector<std::pair<int32_t, Int>> pairs);
    static RowVec from_dense(const std::vector<Int>& entries);

    int32_t dim() const { return dim_; }
    bool is_zero() const { return lead_ < 0; }
    size_t nnz() const;

    // Leading (smallest) nonzero column, -1 for the zero row.
    int32_t lead() const { return lead_; }
    const Int& lead_coeff() const;
    Int coeff(int32_t col) const;

    void negate();
    void scale(const Int& c);

    // this += c * other
    void add_multiple(const Int& c, const RowVec& other);

    // a*x + b*y
    static RowVec linear_comb(const Int& a, const RowVec& x, const Int& b, const RowVec& y);

    std::vector<Int> dense() const;

    // Visits nonzero entries in ascending column order.
    template <class F>
    void for_each(F&& f) const {
        if (dense_) {
            for (int32_t j = lead_ < 0 ? dim_ : lead_; j < dim_; ++j)
                if (dn_[j] != 0) f(j, dn_[j]);
        } else {
            for (const auto& [j, c] : sp_) f(j, c);
        }
    }

    bool operator==(const RowVec& rhs) const;

private:
    void recompute_lead(int32_t from = 0);
    void maybe_densify();

    int32_t dim_;
    bool dense_ = false;
    int32_t lead_ = -1;
    std::vector<std::pair<int32_t, Int>> sp_;
    std::vector<Int> dn_;
};

}  // namespace lcsq
