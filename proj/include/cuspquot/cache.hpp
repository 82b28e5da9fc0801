/**
 * @file cache.hpp
 * @brief Append-only result cache for oracle and per-prime counts.
 *
 * One file; the first line names the engine version and every other line
 * reads `kind;params;value` with an integer value. A file written by a
 * different version is discarded. Malformed lines are skipped and reported.
 */
#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qalgebra.hpp"

namespace cuspquot {

inline constexpr const char* kEngineVersion = "1";
inline constexpr const char* kCacheFileName = "cuspquot-cache.txt";

/// Directory from CUSPQUOT_CACHE_DIR, else $HOME/.cache/cuspquot, else ./.cuspquot-cache.
inline std::filesystem::path default_cache_dir() {
    if (const char* dir = std::getenv("CUSPQUOT_CACHE_DIR"); dir && *dir) return dir;
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "cuspquot";
    return ".cuspquot-cache";
}

class ResultCache {
public:
    /**
     * @brief Open or create the cache file in a directory.
     * @throws std::runtime_error if the directory or file cannot be created.
     */
    explicit ResultCache(const std::filesystem::path& dir, std::string version = kEngineVersion)
        : path_(dir / kCacheFileName), header_("cuspquot-cache v" + std::move(version)) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw std::runtime_error("cache: cannot create " + dir.string() + ": " + ec.message());
        load();
    }

    const std::filesystem::path& path() const { return path_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    size_t size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return entries_.size();
    }

    std::optional<BigInt> get(const std::string& kind, const std::string& params) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = entries_.find({kind, params});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    /// Record a value; the line is appended and flushed immediately.
    void put(const std::string& kind, const std::string& params, const BigInt& value) {
        if (kind.find_first_of(";\n") != std::string::npos || params.find_first_of(";\n") != std::string::npos)
            throw std::invalid_argument("cache: kind and params must not contain ';' or newlines");
        std::lock_guard<std::mutex> lock(mu_);
        if (entries_.count({kind, params})) return;
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::runtime_error("cache: cannot append to " + path_.string());
        out << kind << ';' << params << ';' << value << '\n';
        out.flush();
        if (!out) throw std::runtime_error("cache: write failed for " + path_.string());
        entries_.emplace(std::make_pair(kind, params), value);
    }

    /// Cached value, or compute, store and return it.
    BigInt memoize(const std::string& kind, const std::string& params, const std::function<BigInt()>& compute) {
        if (auto v = get(kind, params)) return *v;
        BigInt v = compute();
        put(kind, params, v);
        return v;
    }

private:
    std::filesystem::path path_;
    std::string header_;
    std::map<std::pair<std::string, std::string>, BigInt> entries_;
    std::vector<std::string> warnings_;
    mutable std::mutex mu_;

    void reset() {
        std::ofstream out(path_, std::ios::trunc);
        if (!out) throw std::runtime_error("cache: cannot write " + path_.string());
        out << header_ << '\n';
    }

    void load() {
        std::ifstream in(path_);
        if (!in) {
            reset();
            return;
        }
        std::string line;
        if (!std::getline(in, line) || line != header_) {
            warnings_.push_back("cache: version header mismatch, discarding " + path_.string());
            in.close();
            reset();
            return;
        }
        int lineno = 1;
        while (std::getline(in, line)) {
            ++lineno;
            auto a = line.find(';');
            auto b = a == std::string::npos ? a : line.find(';', a + 1);
            std::string value = b == std::string::npos ? "" : line.substr(b + 1);
            bool ok = b != std::string::npos && a > 0 && !value.empty() && value.find(';') == std::string::npos;
            size_t digits = ok && value[0] == '-' ? 1 : 0;
            ok = ok && digits < value.size() &&
                 std::all_of(value.begin() + static_cast<std::ptrdiff_t>(digits), value.end(), [](char c) { return c >= '0' && c <= '9'; });
            if (!ok) {
                warnings_.push_back("cache: rejected corrupted line " + std::to_string(lineno) + " in " + path_.string());
                continue;
            }
            entries_[{line.substr(0, a), line.substr(a + 1, b - a - 1)}] = BigInt(value);
        }
    }
};

}  // namespace cuspquot
