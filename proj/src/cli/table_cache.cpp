#include "hhodge/cli/table_cache.hpp"

#include "hhodge/errors.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

namespace hhodge::cli {

namespace {

static_assert(std::endian::native == std::endian::little, "cache files are written in host order");

constexpr char kMagic[4] = {'H', 'H', 'C', 'T'};

std::uint64_t fnv1a(const unsigned char* data, std::size_t n) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

template <typename T>
void put(std::vector<unsigned char>& buf, T v) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &v, sizeof(T));
  buf.insert(buf.end(), bytes, bytes + sizeof(T));
}

template <typename T>
bool get(const std::vector<unsigned char>& buf, std::size_t& pos, T& v) {
  if (pos + sizeof(T) > buf.size()) return false;
  std::memcpy(&v, buf.data() + pos, sizeof(T));
  pos += sizeof(T);
  return true;
}

}  // namespace

std::filesystem::path cache_path(const std::filesystem::path& dir, int d) {
  return dir / ("chartable-d" + std::to_string(d) + ".bin");
}

void save_table(const std::filesystem::path& dir, const CharacterTable& table) {
  std::vector<unsigned char> buf(kMagic, kMagic + 4);
  put(buf, kCacheVersion);
  put(buf, static_cast<std::int32_t>(table.degree()));
  put(buf, static_cast<std::uint64_t>(table.values().size()));
  for (std::int64_t v : table.values()) put(buf, v);
  put(buf, fnv1a(buf.data(), buf.size()));

  std::filesystem::create_directories(dir);
  // write then rename so a reader never sees a half-written file
  const auto target = cache_path(dir, table.degree());
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ResourceLimit("cannot write cache file " + tmp.string());
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  }
  std::filesystem::rename(tmp, target);
}

std::optional<CharacterTable> load_table(const std::filesystem::path& dir, int d) {
  std::ifstream in(cache_path(dir, d), std::ios::binary);
  if (!in) return std::nullopt;
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  std::size_t pos = 4;
  std::uint32_t version = 0;
  std::int32_t degree = 0;
  std::uint64_t count = 0;
  if (buf.size() < 4 || std::memcmp(buf.data(), kMagic, 4) != 0) return std::nullopt;
  if (!get(buf, pos, version) || version != kCacheVersion) return std::nullopt;
  if (!get(buf, pos, degree) || degree != d) return std::nullopt;
  if (!get(buf, pos, count)) return std::nullopt;
  const std::size_t n = partitions_of(d).size();
  if (count != n * n || buf.size() != pos + count * 8 + 8) return std::nullopt;
  std::vector<std::int64_t> values(count);
  for (auto& v : values) get(buf, pos, v);
  std::uint64_t stored = 0;
  const std::size_t body = pos;
  get(buf, pos, stored);
  if (stored != fnv1a(buf.data(), body)) return std::nullopt;
  return CharacterTable(d, std::move(values));
}

CacheOutcome prime_from_cache(const std::filesystem::path& dir, int d) {
  if (auto table = load_table(dir, d)) {
    seed_character_table(std::make_shared<const CharacterTable>(std::move(*table)));
    return CacheOutcome::Loaded;
  }
  auto table = character_table(d);
  save_table(dir, *table);
  return CacheOutcome::Rebuilt;
}

}  // namespace hhodge::cli
