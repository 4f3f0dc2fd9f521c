#include "patternlab/cache.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "patternlab/errors.hpp"

namespace patternlab {

std::string checksum_hex(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string CacheKey::filename() const {
    std::string tag = patterns;
    for (char& c : tag) {
        if (c == '+') c = 'S';  // set separator
        if (c == ',') c = '-';  // wide-letter separator
    }
    return domain + "_" + tag + "_k" + std::to_string(k) + "_n" + std::to_string(n) + ".json";
}

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

namespace {

std::string table_digest(const nlohmann::ordered_json& table) {
    return checksum_hex(table.dump());
}

}  // namespace

std::optional<std::map<std::int64_t, BigInt>> DiskCache::load(const CacheKey& key) const {
    const auto path = dir_ / key.filename();
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::ordered_json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception&) {
        throw CacheError("cache file " + path.string() + " is not valid JSON");
    }
    if (!doc.contains("schema_version") || doc["schema_version"] != kCacheSchemaVersion ||
        !doc.contains("module_version") || doc["module_version"] != kModuleVersion)
        return std::nullopt;  // stale version: recompute
    if (!doc.contains("table") || !doc.contains("checksum"))
        throw CacheError("cache file " + path.string() + " is missing fields");
    if (doc["checksum"] != table_digest(doc["table"]))
        throw CacheError("cache file " + path.string() + " failed its checksum");
    std::map<std::int64_t, BigInt> table;
    for (const auto& [r, count] : doc["table"].items())
        table[std::stoll(r)] = BigInt(count.get<std::string>());
    return table;
}

void DiskCache::store(const CacheKey& key, const std::map<std::int64_t, BigInt>& table) const {
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    for (const auto& [r, count] : table) payload[std::to_string(r)] = count.str();
    nlohmann::ordered_json doc;
    doc["schema_version"] = kCacheSchemaVersion;
    doc["module_version"] = kModuleVersion;
    doc["domain"] = key.domain;
    doc["patterns"] = key.patterns;
    doc["k"] = key.k;
    doc["n"] = key.n;
    doc["checksum"] = table_digest(payload);
    doc["table"] = std::move(payload);
    const auto path = dir_ / key.filename();
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
}

}  // namespace patternlab
