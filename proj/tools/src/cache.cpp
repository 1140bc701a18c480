#include "congruent_cli/cache.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace congruent::cli {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

}  // namespace

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json record = json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.contains("key") || !record.contains("report")) continue;
        if (record.value("engine_version", "") != descent::kEngineVersion) continue;
        records_[record["key"].dump()] = record["report"];
    }
}

std::optional<json> ResultCache::lookup(const json& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = records_.find(key.dump());
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::store(const json& key, const json& report) {
    std::lock_guard<std::mutex> lock(mutex_);
    const std::string k = key.dump();
    if (records_.count(k)) return;
    json record{{"key", key}, {"engine_version", descent::kEngineVersion}, {"timestamp", utc_timestamp()},
                {"report", report}};
    std::ofstream out(path_, std::ios::app);
    out << record.dump() << '\n';
    records_[k] = report;
}

std::size_t ResultCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return records_.size();
}

}  // namespace congruent::cli
