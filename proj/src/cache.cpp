#include "lcsq/cache.hpp"

#include <unistd.h>

#include <fstream>

namespace lcsq {

namespace {

// Stable 64-bit FNV-1a; std::hash is not pinned across builds.
uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::string ResultCache::filename_for(const std::string& key) {
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(key)));
    return std::string(buf) + ".json";
}

std::optional<ResultRecord> ResultCache::load(const std::string& key) const {
    std::filesystem::path file = dir_ / filename_for(key);
    std::ifstream in(file);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        ResultRecord r = ResultRecord::from_json(j.at("record"));
        if (j.at("key").get<std::string>() != key) return std::nullopt;  // hash collision
        if (r.engine != kEngineVersion) return std::nullopt;             // stale version
        return r;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable entry, recompute
    }
}

void ResultCache::store(const ResultRecord& record) const {
    std::string key = record.key();
    nlohmann::json j;
    j["key"] = key;
    j["record"] = record.to_json();
    std::filesystem::path file = dir_ / filename_for(key);
    std::filesystem::path tmp = file;
    tmp += ".tmp." + std::to_string(static_cast<unsigned>(::getpid()));
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
        out << j.dump() << "\n";
    }
    std::filesystem::rename(tmp, file);
}

}  // namespace lcsq
