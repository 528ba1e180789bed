#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lcsq/series.hpp"

namespace lcsq {

inline constexpr const char* kEngineVersion = "lcsq-0.1.0";

// One computed group, flat and diffable. Serializes losslessly to the JSON
// shape {"presentation":{"n":..,"relation":..},"grading":..,"series":..,
// "k":..,"cell":[..]|{"d":..},"rank":..,"invariant_factors":[..],
// "engine":..,"ms":..}.
struct ResultRecord {
    int n = 1;
    std::optional<std::string> relation;
    GradingMode grading = GradingMode::Multi;
    Series series = Series::B;
    int k = 1;
    Cell cell;
    long rank = 0;
    std::vector<Int> invariant_factors;
    std::string engine = kEngineVersion;
    int64_t ms = 0;

    static ResultRecord from_report(const GroupReport& rep);

    AbGroup group() const { return AbGroup(rank, invariant_factors); }

    // Cache key of the record: presentation fingerprint plus query.
    std::string key() const;

    nlohmann::json to_json() const;
    static ResultRecord from_json(const nlohmann::json& j);

    bool operator==(const ResultRecord&) const = default;
};

std::string cache_key(const Presentation& pres, Series s, int k, const Cell& cell);

}  // namespace lcsq
