#include "lcsq/rowvec.hpp"

#include <algorithm>
#include <cassert>

namespace lcsq {

RowVec RowVec::unit(int32_t dim, int32_t col, Int c) {
    RowVec r(dim);
    if (c != 0) {
        r.sp_.emplace_back(col, std::move(c));
        r.lead_ = col;
    }
    return r;
}

RowVec RowVec::from_pairs(int32_t dim, std::vector<std::pair<int32_t, Int>> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    RowVec r(dim);
    for (auto& [j, c] : pairs) {
        if (!r.sp_.empty() && r.sp_.back().first == j) {
            r.sp_.back().second += c;
            if (r.sp_.back().second == 0) r.sp_.pop_back();
        } else if (c != 0) {
            r.sp_.emplace_back(j, std::move(c));
        }
    }
    r.lead_ = r.sp_.empty() ? -1 : r.sp_.front().first;
    r.maybe_densify();
    return r;
}

RowVec RowVec::from_dense(const std::vector<Int>& entries) {
    std::vector<std::pair<int32_t, Int>> pairs;
    for (size_t j = 0; j < entries.size(); ++j)
        if (entries[j] != 0) pairs.emplace_back(static_cast<int32_t>(j), entries[j]);
    return from_pairs(static_cast<int32_t>(entries.size()), std::move(pairs));
}

size_t RowVec::nnz() const {
    if (!dense_) return sp_.size();
    size_t k = 0;
    for (const Int& c : dn_)
        if (c != 0) ++k;
    return k;
}

const Int& RowVec::lead_coeff() const {
    assert(lead_ >= 0);
    return dense_ ? dn_[lead_] : sp_.front().second;
}

Int RowVec::coeff(int32_t col) const {
    if (dense_) return dn_[col];
    auto it = std::lower_bound(sp_.begin(), sp_.end(), col,
                               [](const auto& p, int32_t j) { return p.first < j; });
    if (it != sp_.end() && it->first == col) return it->second;
    return 0;
}

void RowVec::negate() {
    if (dense_) {
        for (Int& c : dn_) c = -c;
    } else {
        for (auto& [j, c] : sp_) c = -c;
    }
}

void RowVec::scale(const Int& c) {
    if (c == 0) {
        sp_.clear();
        dn_.clear();
        dense_ = false;
        lead_ = -1;
        return;
    }
    if (dense_) {
        for (Int& v : dn_) v *= c;
    } else {
        for (auto& [j, v] : sp_) v *= c;
    }
}

void RowVec::add_multiple(const Int& c, const RowVec& other) {
    if (c == 0 || other.is_zero()) return;
    *this = linear_comb(1, *this, c, other);
}

RowVec RowVec::linear_comb(const Int& a, const RowVec& x, const Int& b, const RowVec& y) {
    assert(x.dim_ == y.dim_);
    RowVec r(x.dim_);
    if (x.dense_ || y.dense_) {
        r.dense_ = true;
        r.dn_.assign(static_cast<size_t>(x.dim_), Int(0));
        if (a != 0) x.for_each([&](int32_t j, const Int& c) { r.dn_[j] = a * c; });
        if (b != 0) y.for_each([&](int32_t j, const Int& c) { r.dn_[j] += b * c; });
        r.recompute_lead();
        return r;
    }
    r.sp_.reserve(x.sp_.size() + y.sp_.size());
    auto ix = x.sp_.begin(), ex = x.sp_.end();
    auto iy = y.sp_.begin(), ey = y.sp_.end();
    Int v;
    while (ix != ex || iy != ey) {
        int32_t j;
        if (iy == ey || (ix != ex && ix->first < iy->first)) {
            j = ix->first;
            v = a * ix->second;
            ++ix;
        } else if (ix == ex || iy->first < ix->first) {
            j = iy->first;
            v = b * iy->second;
            ++iy;
        } else {
            j = ix->first;
            v = a * ix->second + b * iy->second;
            ++ix;
            ++iy;
        }
        if (v != 0) r.sp_.emplace_back(j, v);
    }
    r.lead_ = r.sp_.empty() ? -1 : r.sp_.front().first;
    r.maybe_densify();
    return r;
}

std::vector<Int> RowVec::dense() const {
    std::vector<Int> out(static_cast<size_t>(dim_), Int(0));
    for_each([&](int32_t j, const Int& c) { out[j] = c; });
    return out;
}

bool RowVec::operator==(const RowVec& rhs) const {
    if (dim_ != rhs.dim_ || lead_ != rhs.lead_) return false;
    if (!dense_ && !rhs.dense_) return sp_ == rhs.sp_;
    return dense() == rhs.dense();
}

void RowVec::recompute_lead(int32_t from) {
    lead_ = -1;
    for (int32_t j = from; j < dim_; ++j)
        if (dn_[j] != 0) {
            lead_ = j;
            return;
        }
}

void RowVec::maybe_densify() {
    if (dense_ || dim_ < 64) return;
    if (sp_.size() * 4 <= static_cast<size_t>(dim_)) return;
    dn_.assign(static_cast<size_t>(dim_), Int(0));
    for (auto& [j, c] : sp_) dn_[j] = std::move(c);
    sp_.clear();
    sp_.shrink_to_fit();
    dense_ = true;
}

}  // namespace lcsq
