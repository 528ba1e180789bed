#include "lcsq/lattice.hpp"

#include <algorithm>

namespace lcsq {

IntLattice IntLattice::full(int32_t ambient) {
    IntLattice l(ambient);
    l.basis_.reserve(ambient);
    for (int32_t j = 0; j < ambient; ++j) {
        l.basis_.push_back(RowVec::unit(ambient, j));
        l.pivot_cols_.push_back(j);
    }
    return l;
}

bool IntLattice::contains(const RowVec& v) const { return coords(v).has_value(); }

std::optional<std::vector<Int>> IntLattice::coords(const RowVec& v) const {
    std::vector<Int> c(basis_.size(), Int(0));
    RowVec r = v;
    while (!r.is_zero()) {
        int32_t j = r.lead();
        auto it = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), j);
        if (it == pivot_cols_.end() || *it != j) return std::nullopt;
        size_t idx = static_cast<size_t>(it - pivot_cols_.begin());
        const Int& p = basis_[idx].lead_coeff();
        if (!int_divisible(r.lead_coeff(), p)) return std::nullopt;
        Int q = int_divexact(r.lead_coeff(), p);
        r.add_multiple(-q, basis_[idx]);
        c[idx] = std::move(q);
    }
    return c;
}

bool HnfBuilder::add(RowVec r) {
    while (!r.is_zero()) {
        int32_t j = r.lead();
        auto it = piv_.find(j);
        if (it == piv_.end()) {
            if (r.lead_coeff() < 0) r.negate();
            piv_.emplace(j, std::move(r));
            return true;
        }
        RowVec& p = it->second;
        const Int& a = p.lead_coeff();
        const Int& b = r.lead_coeff();
        if (int_divisible(b, a)) {
            r.add_multiple(-int_divexact(b, a), p);
        } else {
            Int s, t;
            Int g = int_gcdext(a, b, s, t);
            RowVec pnew = RowVec::linear_comb(s, p, t, r);
            RowVec rnew = RowVec::linear_comb(int_divexact(a, g), r, -int_divexact(b, g), p);
            p = std::move(pnew);
            r = std::move(rnew);
        }
    }
    return false;
}

void HnfBuilder::add_lattice(const IntLattice& l) {
    for (const RowVec& b : l.basis()) add(b);
}

bool HnfBuilder::contains(const RowVec& v) const {
    RowVec r = v;
    while (!r.is_zero()) {
        auto it = piv_.find(r.lead());
        if (it == piv_.end()) return false;
        const Int& a = it->second.lead_coeff();
        if (!int_divisible(r.lead_coeff(), a)) return false;
        r.add_multiple(-int_divexact(r.lead_coeff(), a), it->second);
    }
    return true;
}

IntLattice HnfBuilder::finalize() {
    IntLattice l(ambient_);
    l.basis_.reserve(piv_.size());
    l.pivot_cols_.reserve(piv_.size());
    for (auto& [j, row] : piv_) {
        l.pivot_cols_.push_back(j);
        l.basis_.push_back(std::move(row));
    }
    piv_.clear();
    // reduce entries above each pivot into [0, pivot), left to right
    for (size_t i = 0; i < l.basis_.size(); ++i) {
        const Int& p = l.basis_[i].lead_coeff();
        for (size_t k = 0; k < i; ++k) {
            Int c = l.basis_[k].coeff(l.pivot_cols_[i]);
            if (c == 0) continue;
            Int q = int_fdiv(c, p);
            if (q != 0) l.basis_[k].add_multiple(-q, l.basis_[i]);
        }
    }
    return l;
}

IntLattice hermite_normal_form(const IntMatrix& m) {
    HnfBuilder b(m.cols());
    for (const RowVec& r : m.rows()) b.add(r);
    return b.finalize();
}

IntLattice lattice_sum(const IntLattice& a, const IntLattice& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("lattice_sum: ambient dimensions differ");
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    HnfBuilder builder(a.ambient_dim());
    builder.add_lattice(a);
    builder.add_lattice(b);
    return builder.finalize();
}

}  // namespace lcsq
