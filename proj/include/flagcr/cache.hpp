#pragma once

#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>

namespace flagcr {

// On-disk JSON artifact cache.  Keys are caller-provided content hashes;
// values are stored one file per key, written atomically (temp file plus
// rename).  A corrupt or truncated file is treated as a miss and a warning
// is emitted; the caller recomputes.
struct CacheConfig {
    std::filesystem::path dir;
    bool enabled = false;
};

std::string fnv1a_hex(std::string_view data);

void cache_store(const CacheConfig& cfg, const std::string& key, const nlohmann::json& value);
std::optional<nlohmann::json> cache_load(const CacheConfig& cfg, const std::string& key);

}  // namespace flagcr
