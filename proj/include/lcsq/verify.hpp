#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lcsq {
namespace verify {

struct Options {
    int jobs = 1;
    std::optional<int64_t> budget_ms;  // overrides the suite default
    bool extended_all = false;         // appendix-large: every tabulated cell
    std::filesystem::path fixtures_dir;
};

struct SuiteResult {
    std::string suite;
    int checked = 0;
    int mismatched = 0;
    bool report_only = false;  // comparison is informational, never gates
    bool budget_exceeded = false;
    int64_t ms = 0;

    bool passed() const { return !budget_exceeded && (report_only || mismatched == 0); }
};

// Suites runnable by name; "all" runs everything except appendix-large.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const Options& opt, std::ostream& out);

}  // namespace verify
}  // namespace lcsq
