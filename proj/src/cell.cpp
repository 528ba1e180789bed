#include "lcsq/cell.hpp"

#include <sstream>

namespace lcsq {

std::string Cell::key() const {
    std::ostringstream os;
    if (mode == GradingMode::Multi) {
        os << "M";
        for (int i = 0; i < md.size(); ++i) {
            if (i) os << ",";
            os << md[i];
        }
    } else {
        os << "T" << d;
    }
    return os.str();
}

std::string Cell::display() const {
    std::ostringstream os;
    if (mode == GradingMode::Multi) {
        os << "(";
        for (int i = 0; i < md.size(); ++i) {
            if (i) os << ",";
            os << md[i];
        }
        os << ")";
    } else {
        os << "d=" << d;
    }
    return os.str();
}

CellBasis::CellBasis(int n, const Cell& cell) : cell_(cell) {
    words_ = cell.mode == GradingMode::Multi
                 ? enumerate_words(cell.md)
                 : enumerate_words_total(n, static_cast<int>(cell.d));
    index_.reserve(words_.size() * 2);
    for (int32_t i = 0; i < static_cast<int32_t>(words_.size()); ++i) index_.emplace(words_[i], i);
}

std::optional<int32_t> CellBasis::index(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace lcsq
