#include "lcsq/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef LCSQ_SOURCE_FIXTURES
#define LCSQ_SOURCE_FIXTURES ""
#endif

namespace lcsq {
namespace fixtures {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open fixture file " + file.string());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;  // first data-looking line is the header
            continue;
        }
        auto fields = split(t, ',');
        for (auto& f : fields) f = strip(f);
        rows.push_back(std::move(fields));
    }
    return rows;
}

std::vector<int32_t> parse_cell(const std::string& text) {
    std::vector<int32_t> cell;
    std::istringstream is(text);
    int v;
    while (is >> v) cell.push_back(v);
    return cell;
}

}  // namespace

std::filesystem::path default_dir() {
    if (const char* env = std::getenv("LCSQ_FIXTURES_DIR")) return env;
    std::filesystem::path local = "fixtures";
    if (std::filesystem::is_directory(local)) return local;
    return LCSQ_SOURCE_FIXTURES;
}

AbGroup parse_torsion(const std::string& text) {
    AbGroup g;
    for (const std::string& tok : split(text, '+')) {
        std::string t = strip(tok);
        if (t.empty()) continue;
        size_t caret = t.find('^');
        Int d(caret == std::string::npos ? t : t.substr(0, caret));
        long count = caret == std::string::npos ? 1 : std::stol(t.substr(caret + 1));
        for (long i = 0; i < count; ++i) g = direct_sum(g, AbGroup::cyclic(d));
    }
    return g;
}

std::vector<oracle::JHSummand> parse_jh(const std::string& text) {
    std::vector<oracle::JHSummand> out;
    for (const std::string& tok : split(text, '+')) {
        std::string t = strip(tok);
        if (t.empty()) continue;
        // [mult]F<j>[<d0>]
        size_t f = t.find('F');
        size_t lb = t.find('[');
        size_t rb = t.find(']');
        if (f == std::string::npos || lb == std::string::npos || rb == std::string::npos ||
            !(f < lb && lb < rb))
            throw std::runtime_error("bad composition-series summand: " + t);
        oracle::JHSummand s;
        s.multiplicity = f == 0 ? 1 : std::stoi(t.substr(0, f));
        s.j = std::stoi(t.substr(f + 1, lb - f - 1));
        s.d0 = std::stoi(t.substr(lb + 1, rb - lb - 1));
        out.push_back(s);
    }
    return out;
}

std::vector<RankEntry> table1(const std::filesystem::path& dir) {
    std::vector<RankEntry> out;
    for (const auto& row : read_csv(dir / "table1.csv"))
        out.push_back({std::stoi(row.at(0)), std::stol(row.at(1)), std::stol(row.at(2)), row.at(3)});
    return out;
}

std::vector<RankEntry> table2(const std::filesystem::path& dir) {
    std::vector<RankEntry> out;
    for (const auto& row : read_csv(dir / "table2.csv"))
        out.push_back({std::stoi(row.at(0)), std::stol(row.at(1)), std::stol(row.at(2)), row.at(3)});
    return out;
}

namespace {

std::vector<TorsionEntry> torsion_table(const std::filesystem::path& file) {
    std::vector<TorsionEntry> out;
    for (const auto& row : read_csv(file)) {
        TorsionEntry e;
        e.n = std::stoi(row.at(0));
        e.k = std::stoi(row.at(1));
        e.cell = parse_cell(row.at(2));
        e.torsion = parse_torsion(row.at(3));
        e.source = row.at(4);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

std::vector<TorsionEntry> appendix_n3(const std::filesystem::path& dir) {
    return torsion_table(dir / "appendix-n3.csv");
}

std::vector<TorsionEntry> appendix_n5n6n7(const std::filesystem::path& dir) {
    return torsion_table(dir / "appendix-n5n6n7.csv");
}

std::vector<JHSeriesEntry> jh_series(const std::filesystem::path& dir) {
    std::vector<JHSeriesEntry> out;
    for (const auto& row : read_csv(dir / "jh-series.csv")) {
        JHSeriesEntry e;
        e.m = std::stoi(row.at(0));
        e.k = std::stoi(row.at(1));
        e.series = parse_jh(row.at(2));
        e.source = row.at(3);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace fixtures
}  // namespace lcsq
