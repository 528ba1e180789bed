#include "lcsq/presentation.hpp"

namespace lcsq {

Presentation::Presentation(int n, std::optional<NcPoly> relation, GradingMode mode)
    : n_(n), relation_(std::move(relation)), mode_(mode) {
    if (n_ < 1) throw std::invalid_argument("generator count must be at least 1");
    if (relation_) {
        if (relation_->is_zero()) throw std::invalid_argument("relation must be nonzero");
        for (const auto& [w, c] : relation_->terms())
            for (int32_t l : w.letters())
                if (l < 0 || l >= n_)
                    throw std::invalid_argument("relation uses a generator outside the presentation");
        auto d = relation_->homogeneous_degree();
        if (!d) throw std::invalid_argument("relation must be homogeneous");
        if (*d < 1) throw std::invalid_argument("relation must have positive degree");
        rel_degree_ = *d;
        rel_mdeg_ = relation_->multihomogeneous_degree(n_);
    }
    if (mode_ == GradingMode::Multi && relation_ && !rel_mdeg_)
        throw GradingError(
            "multidegree grading requires the relation to be multihomogeneous; use total grading");
}

std::string Presentation::fingerprint() const {
    std::string f = "n=" + std::to_string(n_) + ";grading=" + to_string(mode_) + ";f=";
    f += relation_ ? relation_->render(n_) : "(none)";
    return f;
}

GradingMode auto_grading(const std::optional<NcPoly>& relation, int n) {
    if (!relation || relation->multihomogeneous_degree(n)) return GradingMode::Multi;
    return GradingMode::Total;
}

}  // namespace lcsq
