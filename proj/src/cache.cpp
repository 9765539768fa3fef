#include "flagcalc/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>

#include "flagcalc/errors.hpp"

namespace flagcalc {

namespace {

constexpr std::uint32_t kMagic = 0x46434743;  // "FCGC"

struct Fnv {
  std::uint64_t h = 0xcbf29ce484222325ull;
  void bytes(const void* p, std::size_t n) {
    const auto* b = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) h = (h ^ b[i]) * 0x100000001b3ull;
  }
};

template <class T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
bool get(std::istream& is, T& v) {
  return static_cast<bool>(is.read(reinterpret_cast<char*>(&v), sizeof(T)));
}

std::vector<std::uint64_t> blocks_of(const Bitset& b) {
  std::vector<std::uint64_t> out(b.num_blocks());
  boost::to_block_range(b, out.begin());
  return out;
}

}  // namespace

std::uint64_t group_digest(const WeylGroup& group) {
  Fnv f;
  const auto& perms = group.permutation_table();
  f.bytes(perms.data(), perms.size() * sizeof(std::uint16_t));
  for (const Bitset& d : group.downsets()) {
    const auto blocks = blocks_of(d);
    f.bytes(blocks.data(), blocks.size() * sizeof(std::uint64_t));
  }
  return f.h;
}

std::filesystem::path cache_directory(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
  return ".flagcalc-cache";
}

std::filesystem::path cache_file(const std::filesystem::path& dir, Family family, int rank) {
  return dir / (std::string(1, family_letter(family)) + std::to_string(rank) + ".weyl");
}

void write_group_cache(const std::filesystem::path& file, const WeylGroup& group) {
  std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw ResourceError("cannot write cache file " + tmp);
    CacheHeader h{kMagic,       kCacheVersion, family_letter(group.roots().family()),
                  group.rank(), group.size(),  group_digest(group)};
    put(os, h);
    const auto& perms = group.permutation_table();
    os.write(reinterpret_cast<const char*>(perms.data()),
             static_cast<std::streamsize>(perms.size() * sizeof(std::uint16_t)));
    for (const Bitset& d : group.downsets()) {
      const auto blocks = blocks_of(d);
      os.write(reinterpret_cast<const char*>(blocks.data()),
               static_cast<std::streamsize>(blocks.size() * sizeof(std::uint64_t)));
    }
    if (!os) throw ResourceError("cannot write cache file " + tmp);
  }
  std::filesystem::rename(tmp, file);
}

std::optional<WeylGroup> read_group_cache(const std::filesystem::path& file, Family family,
                                          int rank) {
  std::ifstream is(file, std::ios::binary);
  if (!is) return std::nullopt;
  CacheHeader h;
  if (!get(is, h) || h.magic != kMagic || h.version != kCacheVersion ||
      h.family != family_letter(family) || h.rank != rank || h.num_elements == 0 ||
      h.num_elements > kDefaultGroupBound)
    return std::nullopt;
  RootSystem roots(family, rank);
  const std::size_t n = h.num_elements;
  std::vector<std::uint16_t> perms(n * roots.num_roots());
  if (!is.read(reinterpret_cast<char*>(perms.data()),
               static_cast<std::streamsize>(perms.size() * sizeof(std::uint16_t))))
    return std::nullopt;
  const std::size_t nblocks = (n + 63) / 64;
  std::vector<Bitset> downsets;
  downsets.reserve(n);
  std::vector<std::uint64_t> blocks(nblocks);
  for (std::size_t k = 0; k < n; ++k) {
    if (!is.read(reinterpret_cast<char*>(blocks.data()),
                 static_cast<std::streamsize>(nblocks * sizeof(std::uint64_t))))
      return std::nullopt;
    if (n % 64 && (blocks.back() >> (n % 64)) != 0) return std::nullopt;
    Bitset b(blocks.begin(), blocks.end());
    b.resize(n);
    downsets.push_back(std::move(b));
  }
  if (is.peek() != std::char_traits<char>::eof()) return std::nullopt;
  try {
    WeylGroup g(std::move(roots), std::move(perms), std::move(downsets));
    if (group_digest(g) != h.digest) return std::nullopt;
    return g;
  } catch (const Error&) {
    return std::nullopt;
  }
}

WeylGroup load_or_build_group(Family family, int rank, const std::filesystem::path& dir,
                              CacheStatus* status, std::size_t bound) {
  const auto file = cache_file(dir, family, rank);
  const bool existed = std::filesystem::exists(file);
  if (auto g = read_group_cache(file, family, rank); g && g->size() <= bound) {
    if (status) *status = CacheStatus::Loaded;
    return std::move(*g);
  }
  WeylGroup g{RootSystem(family, rank), bound};
  write_group_cache(file, g);
  if (status) *status = existed ? CacheStatus::Regenerated : CacheStatus::Built;
  return g;
}

}  // namespace flagcalc
