#include "flagcr/cache.hpp"

#include <fstream>
#include <iostream>

#include "flagcr/errors.hpp"

namespace flagcr {

std::string fnv1a_hex(std::string_view data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

void cache_store(const CacheConfig& cfg, const std::string& key, const nlohmann::json& value) {
    if (!cfg.enabled) return;
    std::error_code ec;
    std::filesystem::create_directories(cfg.dir, ec);
    const auto path = cfg.dir / (key + ".json");
    const auto tmp = cfg.dir / (key + ".json.tmp");
    {
        std::ofstream out(tmp);
        if (!out) {
            std::cerr << "warning: cache store failed for " << path << "\n";
            return;
        }
        out << value.dump();
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::cerr << "warning: cache rename failed for " << path << ": " << ec.message() << "\n";
}

std::optional<nlohmann::json> cache_load(const CacheConfig& cfg, const std::string& key) {
    if (!cfg.enabled) return std::nullopt;
    const auto path = cfg.dir / (key + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        nlohmann::json doc;
        in >> doc;
        return doc;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "warning: discarding corrupt cache entry " << path << ": " << e.what()
                  << "\n";
        return std::nullopt;
    }
}

}  // namespace flagcr
