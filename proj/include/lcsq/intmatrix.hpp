#pragma once

#include <vector>

#include "lcsq/rowvec.hpp"

namespace lcsq {

// Row-major exact integer matrix; the row set may be empty.
class IntMatrix {
public:
    explicit IntMatrix(int32_t cols) : cols_(cols) {}
    IntMatrix(int32_t cols, std::vector<RowVec> rows) : cols_(cols), rows_(std::move(rows)) {}

    static IntMatrix from_dense(const std::vector<std::vector<Int>>& rows, int32_t cols) {
        IntMatrix m(cols);
        for (const auto& r : rows) m.rows_.push_back(RowVec::from_dense(r));
        return m;
    }

    int32_t cols() const { return cols_; }
    size_t row_count() const { return rows_.size(); }
    const RowVec& row(size_t i) const { return rows_[i]; }
    const std::vector<RowVec>& rows() const { return rows_; }

    void add_row(RowVec r) { rows_.push_back(std::move(r)); }

    Int entry(size_t i, int32_t j) const { return rows_[i].coeff(j); }

private:
    int32_t cols_;
    std::vector<RowVec> rows_;
};

}  // namespace lcsq
