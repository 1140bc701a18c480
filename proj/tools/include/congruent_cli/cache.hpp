#pragma once

// Append-only JSON-lines result cache.  A record is reused only when its key
// (command, n, engine version, bounds, moduli) equals the request exactly,
// so cached and uncached runs print the same report.

#include "congruent_cli/serialize.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace congruent::cli {

inline constexpr const char* kCacheEnvVar = "CONGRUENT_CACHE";

class ResultCache {
public:
    // Loads existing records; malformed lines are skipped.
    explicit ResultCache(std::string path);

    std::optional<json> lookup(const json& key) const;
    // Appends one record {key, engine_version, timestamp, report}; writes are serialized.
    void store(const json& key, const json& report);

    std::size_t size() const;
    const std::string& path() const { return path_; }

private:
    std::string path_;
    mutable std::mutex mutex_;
    std::map<std::string, json> records_;  // key dump -> report
};

}  // namespace congruent::cli
