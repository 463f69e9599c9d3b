#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>

namespace navoid {

struct CacheEntry {
    std::uint64_t q = 0;
    std::uint64_t a = 0;
    std::uint64_t x = 0;
    std::uint64_t count = 0;
    std::string method;
    std::string created_at;  // ISO-8601 UTC
};

// Append-only CSV count cache keyed by (q, a, x, method); on load the newest
// entry for a key wins and corrupt rows are skipped with a warning on stderr.
class CountCache {
public:
    // Missing file loads as an empty cache.
    static CountCache load(const std::filesystem::path& path);

    const CacheEntry* find(std::uint64_t q, std::uint64_t a, std::uint64_t x,
                           const std::string& method) const;
    std::size_t size() const { return entries_.size(); }

    // Appends one row, writing the header first if the file does not exist.
    static void append(const std::filesystem::path& path, const CacheEntry& entry);

private:
    using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::string>;
    std::map<Key, CacheEntry> entries_;
};

}  // namespace navoid
