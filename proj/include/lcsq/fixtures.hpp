#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lcsq/abgroup.hpp"
#include "lcsq/oracle.hpp"
#include "lcsq/word.hpp"

namespace lcsq {
namespace fixtures {

// Checked-in CSV tables of expected values; every entry carries the label of
// the published table or statement it was transcribed from. Cells that were
// left open there are simply absent here.

std::filesystem::path default_dir();

struct RankEntry {
    int first = 0;  // m for the N_2 table, k for the B_k table
    long d = 0;
    long rank = 0;
    std::string source;
};

std::vector<RankEntry> table1(const std::filesystem::path& dir);
std::vector<RankEntry> table2(const std::filesystem::path& dir);

struct TorsionEntry {
    int n = 0;
    int k = 0;
    std::vector<int32_t> cell;
    AbGroup torsion;  // rank 0, expected invariant factors
    std::string source;
};

std::vector<TorsionEntry> appendix_n3(const std::filesystem::path& dir);
std::vector<TorsionEntry> appendix_n5n6n7(const std::filesystem::path& dir);

struct JHSeriesEntry {
    int m = 0;
    int k = 0;
    std::vector<oracle::JHSummand> series;
    std::string source;
};

std::vector<JHSeriesEntry> jh_series(const std::filesystem::path& dir);

// "3^22" -> (Z/3)^22, "2+4" -> Z/2 + Z/4, "" -> 0.
AbGroup parse_torsion(const std::string& text);
// "F1[2]+2F2[3]" -> summand list.
std::vector<oracle::JHSummand> parse_jh(const std::string& text);

}  // namespace fixtures
}  // namespace lcsq
