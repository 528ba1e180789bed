#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "lcsq/cache.hpp"
#include "lcsq/parser.hpp"

using namespace lcsq;

#ifndef LCSQ_CLI_PATH
#define LCSQ_CLI_PATH ""
#endif

namespace {

ResultRecord sample_record() {
    ResultRecord r;
    r.n = 2;
    r.relation = "x^3 + y^3";
    r.grading = GradingMode::Total;
    r.series = Series::N;
    r.k = 2;
    r.cell = Cell::total(4);
    r.rank = 1;
    r.invariant_factors = {};
    r.ms = 17;
    return r;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LCSQ_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof(buf), pipe)) out += buf;
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("result records round-trip through JSON") {
    ResultRecord r = sample_record();
    CHECK(ResultRecord::from_json(r.to_json()) == r);

    ResultRecord free_rec;
    free_rec.n = 5;
    free_rec.grading = GradingMode::Multi;
    free_rec.series = Series::N;
    free_rec.k = 3;
    free_rec.cell = Cell::multi(MultiDegree{{1, 1, 1, 1, 1}});
    free_rec.rank = 7;
    free_rec.invariant_factors = {Int(3)};
    CHECK(ResultRecord::from_json(free_rec.to_json()) == free_rec);

    nlohmann::json j = free_rec.to_json();
    CHECK(j["presentation"]["relation"].is_null());
    CHECK(j["cell"].is_array());
    CHECK(sample_record().to_json()["cell"]["d"] == 4);
}

TEST_CASE("cache stores and reloads records") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "lcsq-cache-test";
    std::filesystem::remove_all(dir);
    ResultCache cache(dir);

    ResultRecord r = sample_record();
    cache.store(r);
    auto loaded = cache.load(r.key());
    REQUIRE(loaded.has_value());
    CHECK(*loaded == r);

    // a record written by another engine version is ignored
    ResultRecord stale = sample_record();
    stale.k = 3;
    stale.engine = "lcsq-0.0.0";
    cache.store(stale);
    CHECK(!cache.load(stale.key()).has_value());

    // distinct keys land in distinct files; concurrent writers keep both
    ResultRecord other = sample_record();
    other.cell = Cell::total(5);
    std::thread t1([&] { cache.store(r); });
    std::thread t2([&] { cache.store(other); });
    t1.join();
    t2.join();
    CHECK(cache.load(r.key()).has_value());
    CHECK(cache.load(other.key()).has_value());

    // no temp droppings left behind
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        CHECK(entry.path().extension() == ".json");

    std::filesystem::remove_all(dir);
}

TEST_CASE("cli computes cells and honors exit codes") {
    if (std::string(LCSQ_CLI_PATH).empty()) return;

    // trivial group in a free-algebra cell
    RunResult r = run_cli("compute -g 2 --series B --k 2 --cell 1,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(1,0)") != std::string::npos);
    CHECK(r.output.find("0") != std::string::npos);

    // known torsion cell, json output
    r = run_cli("compute -g 2 -r \"y*x - 3*x*y\" --series B --k 2 --cell 1,2 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"invariant_factors\": [") != std::string::npos);
    CHECK(r.output.find("2") != std::string::npos);

    // parse error -> exit 2
    r = run_cli("compute -g 2 -r \"x^\" --series B --k 2 --cell 1,1");
    CHECK(r.exit_code == 2);

    // multigrading for a relation that is only totally graded -> exit 3
    r = run_cli("compute -g 2 -r \"x^2 + y^2\" --series N --k 2 --cell 1,1 --grading multi");
    CHECK(r.exit_code == 3);

    // oracle subcommands
    r = run_cli("oracle qpoly --q 3 --series N --k 3 --cell 2,2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Z/8") != std::string::npos);

    r = run_cli("oracle torsion3 --n 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("22") != std::string::npos);

    r = run_cli("oracle n3conj --m 4 --d 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("5") != std::string::npos);
    CHECK(r.output.find("CONJECTURE") != std::string::npos);

    r = run_cli("oracle jh --m 3 --k 4 --d 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("7") != std::string::npos);

    // unknown suite -> exit 2
    r = run_cli("verify no-such-suite");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli sweeps use the cache directory") {
    if (std::string(LCSQ_CLI_PATH).empty()) return;
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "lcsq-cli-cache-test";
    std::filesystem::remove_all(dir);

    std::string base = "compute -g 2 -r \"x^3+y^3\" --series N --k 2 --max-degree 5 --format csv "
                       "--cache-dir " +
                       dir.string();
    RunResult first = run_cli(base);
    CHECK(first.exit_code == 0);
    REQUIRE(std::filesystem::is_directory(dir));
    size_t files = std::distance(std::filesystem::directory_iterator(dir),
                                 std::filesystem::directory_iterator{});
    CHECK(files == 6);  // one record per cell, d = 0..5

    RunResult second = run_cli(base);
    CHECK(second.exit_code == 0);
    CHECK(second.output == first.output);

    std::filesystem::remove_all(dir);
}
