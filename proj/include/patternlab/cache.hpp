#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "patternlab/numeric.hpp"

namespace patternlab {

/// Bumped whenever a change could invalidate previously cached tables.
/// Files written under another version are recomputed, never migrated.
inline constexpr int kCacheSchemaVersion = 1;
inline constexpr const char* kModuleVersion = "patternlab-1";

struct CacheKey {
    std::string domain;    // "words", "perms", "surjective"
    std::string patterns;  // canonical pattern-set string
    int k = 0;
    std::int64_t n = 0;

    std::string filename() const;
};

/// One JSON file per count table. Every payload carries a checksum; a file
/// that fails it raises CacheError rather than feeding a silent wrong count
/// downstream.
class DiskCache {
public:
    explicit DiskCache(std::filesystem::path dir);

    /// nullopt on miss or version mismatch; CacheError on corruption.
    std::optional<std::map<std::int64_t, BigInt>> load(const CacheKey& key) const;
    void store(const CacheKey& key, const std::map<std::int64_t, BigInt>& table) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

/// FNV-1a 64-bit digest, hex-encoded.
std::string checksum_hex(const std::string& payload);

}  // namespace patternlab
