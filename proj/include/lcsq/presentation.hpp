#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "lcsq/ncpoly.hpp"

namespace lcsq {

enum class GradingMode { Multi, Total };

inline const char* to_string(GradingMode m) {
    return m == GradingMode::Multi ? "multi" : "total";
}

// Requesting the full multigrading for a relation that is not
// multihomogeneous is a caller error with its own exit code at the CLI.
class GradingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Finitely presented graded ring: n generators and at most one homogeneous
// relation.
class Presentation {
public:
    Presentation(int n, std::optional<NcPoly> relation, GradingMode mode);

    static Presentation free_algebra(int n, GradingMode mode = GradingMode::Multi) {
        return Presentation(n, std::nullopt, mode);
    }

    int generators() const { return n_; }
    const std::optional<NcPoly>& relation() const { return relation_; }
    GradingMode grading() const { return mode_; }

    bool has_relation() const { return relation_.has_value(); }
    // Total degree m of the relation; 0 when absent.
    long relation_degree() const { return rel_degree_; }
    // Present exactly when the relation is multihomogeneous.
    const std::optional<MultiDegree>& relation_multidegree() const { return rel_mdeg_; }

    // Stable identity string used as memoization and cache key component.
    std::string fingerprint() const;

    bool operator==(const Presentation&) const = default;

private:
    int n_;
    std::optional<NcPoly> relation_;
    GradingMode mode_;
    long rel_degree_ = 0;
    std::optional<MultiDegree> rel_mdeg_;
};

// Chooses the grading for the given relation: the full multigrading whenever
// it is admissible, total degree otherwise.
GradingMode auto_grading(const std::optional<NcPoly>& relation, int n);

}  // namespace lcsq
