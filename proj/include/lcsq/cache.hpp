#pragma once

#include <filesystem>
#include <optional>

#include "lcsq/record.hpp"

namespace lcsq {

// Persistent result store: one JSON object per key, one file per key,
// written atomically (temp file + rename). Records from another engine
// version are ignored on load.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<ResultRecord> load(const std::string& key) const;
    void store(const ResultRecord& record) const;

    static std::string filename_for(const std::string& key);

private:
    std::filesystem::path dir_;
};

}  // namespace lcsq
