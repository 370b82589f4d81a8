#pragma once

#include "gc/space.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gc {

inline constexpr const char* kCacheFormatVersion = "gc-cache-1";

// Cache kinds, one file each per k.
inline constexpr const char* kCacheKinds[] = {"basis", "zeros", "relations", "rref"};

std::filesystem::path cache_file(const std::filesystem::path& dir, int k, const std::string& kind);

// Missing, unreadable, or outdated files load as nullopt.
std::optional<Enumeration> load_enumeration(const std::filesystem::path& dir, int k);
std::optional<RelationSet> load_relations(const std::filesystem::path& dir, int k, const IhxCoefficients& ihx);
std::optional<RationalRref> load_rref(const std::filesystem::path& dir, int k, const IhxCoefficients& ihx);

// Writes go through a temporary file and a rename. IoFailure on error.
void save_enumeration(const std::filesystem::path& dir, const Enumeration& e);
void save_relations(const std::filesystem::path& dir, const RelationSet& r, const IhxCoefficients& ihx);
void save_rref(const std::filesystem::path& dir, int k, const RationalRref& rref, const IhxCoefficients& ihx);

struct CacheEntry {
  int k = 0;
  std::string kind;
  std::uintmax_t size = 0;
  std::string format_version;
};

// Sorted by (k, kind).
std::vector<CacheEntry> cache_status(const std::filesystem::path& dir);

// Removes every cache file in dir; returns how many were removed.
std::size_t cache_clear(const std::filesystem::path& dir);

}  // namespace gc
