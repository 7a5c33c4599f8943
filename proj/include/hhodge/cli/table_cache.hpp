#pragma once

#include "hhodge/characters.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace hhodge::cli {

// File layout, little-endian:
//   "HHCT" | u32 version | i32 degree | u64 count | count x i64 | u64 FNV-1a of everything before
inline constexpr std::uint32_t kCacheVersion = 1;

std::filesystem::path cache_path(const std::filesystem::path& dir, int d);

void save_table(const std::filesystem::path& dir, const CharacterTable& table);

/// nullopt when the file is missing, truncated, from another version or
/// fails its checksum.
std::optional<CharacterTable> load_table(const std::filesystem::path& dir, int d);

enum class CacheOutcome { Loaded, Rebuilt };

/// Installs the table for d into the process memo, reading it from `dir`
/// when a valid file exists and writing a fresh one otherwise.
CacheOutcome prime_from_cache(const std::filesystem::path& dir, int d);

}  // namespace hhodge::cli
