#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "flagcalc/weyl_group.hpp"

namespace flagcalc {

inline constexpr std::uint32_t kCacheVersion = 1;
inline constexpr const char* kCacheDirEnv = "FLAGCALC_CACHE_DIR";

struct CacheHeader {
  std::uint32_t magic = 0;
  std::uint32_t version = 0;
  char family = 0;
  std::int32_t rank = 0;
  std::uint64_t num_elements = 0;
  std::uint64_t digest = 0;
};

/// FNV-1a over the permutation table and the Bruhat down-set blocks.
std::uint64_t group_digest(const WeylGroup& group);

/// The flag value if given, else the environment variable, else
/// ".flagcalc-cache" in the working directory.
std::filesystem::path cache_directory(const std::optional<std::string>& flag);

std::filesystem::path cache_file(const std::filesystem::path& dir, Family family, int rank);

enum class CacheStatus { Built, Loaded, Regenerated };

/// Loads the group from its cache file or enumerates and writes it. A file
/// with a wrong version, type, size or digest is replaced.
/// `bound` caps the enumeration (ResourceError beyond it).
WeylGroup load_or_build_group(Family family, int rank, const std::filesystem::path& dir,
                              CacheStatus* status = nullptr,
                              std::size_t bound = kDefaultGroupBound);

/// Reads a cache file; nullopt when it is missing or fails any check.
std::optional<WeylGroup> read_group_cache(const std::filesystem::path& file, Family family,
                                          int rank);
void write_group_cache(const std::filesystem::path& file, const WeylGroup& group);

}  // namespace flagcalc
