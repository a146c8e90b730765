#pragma once

// Persistent decomposition cache: one file per entry under a
// content-addressed directory tree. Entries are canonical JSON; version or
// key mismatches and corrupt files read as misses.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "supermf/root_data.hpp"

namespace supermf {

inline constexpr const char* kEngineVersion = "supermf-engine-1";

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

class DiskCache {
public:
    explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
    }

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<std::map<WeightVec, long long>> get(const std::string& key) const {
        std::ifstream in(entry_path(key));
        if (!in) return std::nullopt;
        nlohmann::json j;
        try {
            in >> j;
            if (j.at("version").get<std::string>() != kEngineVersion) return std::nullopt;
            if (j.at("key").get<std::string>() != key) return std::nullopt;
            std::map<WeightVec, long long> terms;
            for (const auto& item : j.at("value")) {
                WeightVec w = item.at(0).get<WeightVec>();
                long long m = item.at(1).get<long long>();
                terms[w] = m;
            }
            hits_++;
            return terms;
        } catch (...) {
            return std::nullopt;  // corrupt entries are recomputed
        }
    }

    void put(const std::string& key, const std::map<WeightVec, long long>& terms) const {
        nlohmann::json value = nlohmann::json::array();
        for (const auto& [w, m] : terms) value.push_back({w, m});
        nlohmann::json j{{"version", kEngineVersion}, {"key", key}, {"value", value}};
        auto path = entry_path(key);
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        auto tmp = path;
        tmp += ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(this));
        {
            std::ofstream out(tmp);
            if (!out) return;  // storage trouble is a cache miss, never an error
            out << j.dump();
        }
        std::filesystem::rename(tmp, path, ec);
        if (ec) std::filesystem::remove(tmp, ec);
    }

    long long hits() const { return hits_.load(); }

private:
    std::filesystem::path entry_path(const std::string& key) const {
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(fnv1a64(key)));
        std::string hex(buf);
        return dir_ / hex.substr(0, 2) / (hex + ".json");
    }

    std::filesystem::path dir_;
    mutable std::atomic<long long> hits_{0};
};

namespace detail {
inline std::shared_ptr<DiskCache>& disk_cache_slot() {
    static std::shared_ptr<DiskCache> slot;
    return slot;
}
inline std::mutex& disk_cache_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace detail

inline void set_disk_cache(std::shared_ptr<DiskCache> cache) {
    std::lock_guard<std::mutex> lock(detail::disk_cache_mutex());
    detail::disk_cache_slot() = std::move(cache);
}

inline DiskCache* active_disk_cache() {
    std::lock_guard<std::mutex> lock(detail::disk_cache_mutex());
    return detail::disk_cache_slot().get();
}

}  // namespace supermf
