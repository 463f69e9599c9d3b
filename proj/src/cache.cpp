#include "navoid/cache.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "navoid/csv.hpp"

namespace navoid {

namespace {

constexpr const char* kHeader = "q,a,x,count,method,created_at";

std::string now_utc_iso8601() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
    if (s.empty()) return false;
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    out = v;
    return true;
}

}  // namespace

CountCache CountCache::load(const std::filesystem::path& path) {
    CountCache cache;
    std::ifstream in(path);
    if (!in) return cache;  // missing file: empty cache
    std::string line;
    bool first = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first) {
            first = false;
            if (line == kHeader) continue;
        }
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        CacheEntry e;
        if (fields.size() != 6 || !parse_u64(fields[0], e.q) || !parse_u64(fields[1], e.a) ||
            !parse_u64(fields[2], e.x) || !parse_u64(fields[3], e.count) || fields[4].empty()) {
            std::cerr << "warning: skipping corrupt cache row " << path.string() << ":"
                      << lineno << "\n";
            continue;
        }
        e.method = fields[4];
        e.created_at = fields[5];
        cache.entries_[Key{e.q, e.a, e.x, e.method}] = e;  // newest wins
    }
    return cache;
}

const CacheEntry* CountCache::find(std::uint64_t q, std::uint64_t a, std::uint64_t x,
                                   const std::string& method) const {
    const auto it = entries_.find(Key{q, a, x, method});
    return it == entries_.end() ? nullptr : &it->second;
}

void CountCache::append(const std::filesystem::path& path, const CacheEntry& entry) {
    const bool fresh = !std::filesystem::exists(path);
    std::ofstream out(path, std::ios::app);
    if (!out)
        throw std::runtime_error("cannot open cache file for append: " + path.string());
    if (fresh) out << kHeader << "\n";
    CacheEntry e = entry;
    if (e.created_at.empty()) e.created_at = now_utc_iso8601();
    out << e.q << ',' << e.a << ',' << e.x << ',' << e.count << ',' << csv_escape(e.method)
        << ',' << csv_escape(e.created_at) << "\n";
    if (!out) throw std::runtime_error("cache write failed: " + path.string());
}

}  // namespace navoid
