#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lcsq/intmatrix.hpp"

namespace lcsq {

// Raised when a quotient is requested for lattices that are not nested;
// always indicates a bug in the caller, never bad user input.
class ContainmentViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Subgroup of Z^m held as its canonical row Hermite basis: pivot columns
// strictly increasing, pivots positive, entries above each pivot reduced
// into [0, pivot).
class IntLattice {
public:
    explicit IntLattice(int32_t ambient) : ambient_(ambient) {}

    static IntLattice full(int32_t ambient);

    int32_t ambient_dim() const { return ambient_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<RowVec>& basis() const { return basis_; }

    bool contains(const RowVec& v) const;
    // Unique c with c * basis = v, when v lies in the lattice.
    std::optional<std::vector<Int>> coords(const RowVec& v) const;

    bool operator==(const IntLattice& rhs) const {
        return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
    }

private:
    friend class HnfBuilder;
    int32_t ambient_;
    std::vector<RowVec> basis_;         // echelon order
    std::vector<int32_t> pivot_cols_;   // parallel to basis_
};

// Incremental Hermite-form accumulator. Rows already in the span are
// discarded, which keeps the working set no taller than the ambient
// dimension regardless of how many spanning rows are generated.
class HnfBuilder {
public:
    explicit HnfBuilder(int32_t ambient) : ambient_(ambient) {}

    // Returns true when the row enlarged the span.
    bool add(RowVec r);
    void add_lattice(const IntLattice& l);

    bool contains(const RowVec& r) const;
    int rank() const { return static_cast<int>(piv_.size()); }
    int32_t ambient_dim() const { return ambient_; }

    // Canonicalizes (upper entries reduced mod pivots) and extracts the
    // lattice; the builder is left empty.
    IntLattice finalize();

private:
    int32_t ambient_;
    std::map<int32_t, RowVec> piv_;  // pivot column -> row
};

IntLattice hermite_normal_form(const IntMatrix& m);

IntLattice lattice_sum(const IntLattice& a, const IntLattice& b);

}  // namespace lcsq
