#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "lcsq/presentation.hpp"
#include "lcsq/word.hpp"

namespace lcsq {

// A graded cell of the free algebra: one exponent vector under the full
// multigrading, a single total degree otherwise.
struct Cell {
    GradingMode mode;
    MultiDegree md;  // meaningful when mode == Multi
    long d = 0;      // total degree (redundant with md.total() when Multi)

    static Cell multi(MultiDegree m) {
        Cell c{GradingMode::Multi, std::move(m), 0};
        c.d = c.md.total();
        return c;
    }
    static Cell total(long degree) { return Cell{GradingMode::Total, MultiDegree{}, degree}; }

    long total_degree() const { return d; }

    std::string key() const;      // compact map key, e.g. "M1,2" / "T5"
    std::string display() const;  // human form, e.g. "(1,2)" / "d=5"

    bool operator==(const Cell&) const = default;
};

// Lexicographically ordered monomial basis of a cell, with index lookup.
class CellBasis {
public:
    CellBasis(int n, const Cell& cell);

    const Cell& cell() const { return cell_; }
    int32_t dim() const { return static_cast<int32_t>(words_.size()); }
    const Word& word(int32_t i) const { return words_[i]; }
    std::optional<int32_t> index(const Word& w) const;

private:
    Cell cell_;
    std::vector<Word> words_;
    std::unordered_map<Word, int32_t, WordHash> index_;
};

}  // namespace lcsq
