#include "lcsq/record.hpp"

#include "lcsq/parser.hpp"

namespace lcsq {

ResultRecord ResultRecord::from_report(const GroupReport& rep) {
    ResultRecord r;
    r.n = rep.query.pres.generators();
    if (rep.query.pres.has_relation())
        r.relation = rep.query.pres.relation()->render(r.n);
    r.grading = rep.query.pres.grading();
    r.series = rep.query.series;
    r.k = rep.query.k;
    r.cell = rep.query.cell;
    r.rank = rep.group.rank();
    r.invariant_factors = rep.group.invariant_factors();
    r.ms = rep.ms;
    return r;
}

std::string cache_key(const Presentation& pres, Series s, int k, const Cell& cell) {
    return pres.fingerprint() + "|" + to_string(s) + "|k=" + std::to_string(k) + "|" + cell.key();
}

std::string ResultRecord::key() const {
    std::optional<NcPoly> rel;
    if (relation) rel = parse_poly(*relation, n);
    Presentation pres(n, std::move(rel), grading);
    return cache_key(pres, series, k, cell);
}

nlohmann::json ResultRecord::to_json() const {
    nlohmann::json j;
    j["presentation"]["n"] = n;
    if (relation)
        j["presentation"]["relation"] = *relation;
    else
        j["presentation"]["relation"] = nullptr;
    j["grading"] = to_string(grading);
    j["series"] = to_string(series);
    j["k"] = k;
    if (cell.mode == GradingMode::Multi)
        j["cell"] = cell.md.exponents();
    else
        j["cell"] = nlohmann::json{{"d", cell.d}};
    j["rank"] = rank;
    auto& factors = j["invariant_factors"] = nlohmann::json::array();
    for (const Int& d : invariant_factors) factors.push_back(to_long(d));
    j["engine"] = engine;
    j["ms"] = ms;
    return j;
}

ResultRecord ResultRecord::from_json(const nlohmann::json& j) {
    ResultRecord r;
    r.n = j.at("presentation").at("n").get<int>();
    const auto& rel = j.at("presentation").at("relation");
    if (!rel.is_null()) r.relation = rel.get<std::string>();
    r.grading = j.at("grading").get<std::string>() == "multi" ? GradingMode::Multi
                                                              : GradingMode::Total;
    r.series = j.at("series").get<std::string>() == "B" ? Series::B : Series::N;
    r.k = j.at("k").get<int>();
    const auto& cell = j.at("cell");
    if (cell.is_array()) {
        std::vector<int32_t> e;
        for (const auto& v : cell) e.push_back(v.get<int32_t>());
        r.cell = Cell::multi(MultiDegree{std::move(e)});
    } else {
        r.cell = Cell::total(cell.at("d").get<long>());
    }
    r.rank = j.at("rank").get<long>();
    for (const auto& v : j.at("invariant_factors")) r.invariant_factors.emplace_back(v.get<long>());
    r.engine = j.at("engine").get<std::string>();
    r.ms = j.at("ms").get<int64_t>();
    return r;
}

}  // namespace lcsq
