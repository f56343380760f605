#pragma once

// On-disk Weyl tables. Layout (little endian):
//   "GKSWEYL\0", u32 version, u8 family, u32 rank, u8 affine, i32 max_length, u8 complete,
//   u64 element_count, u32 dim, then per element: u32 length, length bytes of word,
//   dim*dim i64 matrix entries.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include "weyl.hpp"

namespace gksum {

inline constexpr std::uint32_t kWeylCacheVersion = 1;

namespace detail {

template <class T>
void put(std::ostream& out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.put(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff));
}

template <class T>
bool get(std::istream& in, T& v) {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    const int c = in.get();
    if (c == EOF) return false;
    x |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  v = static_cast<T>(x);
  return true;
}

constexpr char kMagic[8] = {'G', 'K', 'S', 'W', 'E', 'Y', 'L', '\0'};

}  // namespace detail

inline std::filesystem::path weyl_cache_file(const std::filesystem::path& dir, const RootSystemDescriptor& d) {
  return dir / ("weyl_" + std::string(1, d.family) + std::to_string(d.rank) + (d.affine ? "_affine" : "") + ".bin");
}

/// Default directory: $GKSUM_CACHE_DIR, else ".gksum-cache".
inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("GKSUM_CACHE_DIR"); env && *env) return env;
  return ".gksum-cache";
}

inline void write_weyl_cache(const std::filesystem::path& file, const WeylTable& t) {
  std::filesystem::create_directories(file.parent_path().empty() ? "." : file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(detail::kMagic, sizeof detail::kMagic);
    const auto& d = t.descriptor();
    detail::put<std::uint32_t>(out, kWeylCacheVersion);
    detail::put<std::uint8_t>(out, static_cast<std::uint8_t>(d.family));
    detail::put<std::uint32_t>(out, static_cast<std::uint32_t>(d.rank));
    detail::put<std::uint8_t>(out, d.affine ? 1 : 0);
    detail::put<std::int32_t>(out, t.max_length());
    detail::put<std::uint8_t>(out, t.complete() ? 1 : 0);
    detail::put<std::uint64_t>(out, t.size());
    detail::put<std::uint32_t>(out, static_cast<std::uint32_t>(t.dim()));
    for (const auto& e : t.elements()) {
      detail::put<std::uint32_t>(out, static_cast<std::uint32_t>(e.length()));
      for (int i : e.word) detail::put<std::uint8_t>(out, static_cast<std::uint8_t>(i));
      for (auto x : e.matrix.entries()) detail::put<std::int64_t>(out, x);
    }
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

/// Reads a cache file; returns nullopt (with a message in `why`) when absent, stale or corrupt.
inline std::optional<WeylTable> read_weyl_cache(const std::filesystem::path& file, const RootSystemDescriptor& want,
                                                std::string* why = nullptr) {
  auto fail = [&](std::string msg) -> std::optional<WeylTable> {
    if (why) *why = std::move(msg);
    return std::nullopt;
  };
  std::ifstream in(file, std::ios::binary);
  if (!in) return fail("no cache file");
  char magic[8];
  if (!in.read(magic, sizeof magic) || !std::equal(magic, magic + 8, detail::kMagic)) return fail("bad magic");
  std::uint32_t version = 0, rank = 0, dim = 0;
  std::uint8_t family = 0, affine = 0, complete = 0;
  std::int32_t max_length = 0;
  std::uint64_t count = 0;
  if (!detail::get(in, version)) return fail("truncated header");
  if (version != kWeylCacheVersion) return fail("format version " + std::to_string(version) + " is stale");
  if (!detail::get(in, family) || !detail::get(in, rank) || !detail::get(in, affine) || !detail::get(in, max_length) ||
      !detail::get(in, complete) || !detail::get(in, count) || !detail::get(in, dim))
    return fail("truncated header");
  RootSystemDescriptor got{static_cast<char>(family), static_cast<int>(rank), affine != 0};
  if (!(got == want)) return fail("cache holds " + got.name());
  if (max_length < 0 || dim == 0 || dim > 64) return fail("corrupt header");
  std::vector<WeylElement> elems;
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint32_t len = 0;
    if (!detail::get(in, len) || len > static_cast<std::uint32_t>(max_length)) return fail("corrupt element");
    WeylElement e{IntMatrix(dim), std::vector<int>(len)};
    for (auto& i : e.word) {
      std::uint8_t b = 0;
      if (!detail::get(in, b) || b >= dim) return fail("corrupt word");
      i = b;
    }
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        std::int64_t x = 0;
        if (!detail::get(in, x)) return fail("truncated body");
        e.matrix(r, c) = x;
      }
    elems.push_back(std::move(e));
  }
  if (in.peek() != EOF) return fail("trailing bytes");
  try {
    return WeylTable::from_elements(want, dim, max_length, complete != 0, std::move(elems));
  } catch (const std::exception& ex) {
    return fail(ex.what());
  }
}

/**
 * Table with all elements of length <= max_length, read from `dir` when possible.
 * A shorter cached table is extended from its last layer; stale or corrupt files are
 * rebuilt with a warning on stderr. The file is rewritten whenever it grew.
 */
inline WeylTable load_or_build(const RootSystem& rs, int max_length, const std::filesystem::path& dir) {
  const auto file = weyl_cache_file(dir, rs.desc);
  std::string why;
  auto cached = read_weyl_cache(file, rs.desc, &why);
  if (!cached && std::filesystem::exists(file)) std::cerr << "warning: ignoring Weyl cache " << file << ": " << why << '\n';
  if (cached && cached->dim() != rs.dim) {
    std::cerr << "warning: ignoring Weyl cache " << file << ": dimension mismatch\n";
    cached.reset();
  }
  WeylTable t = cached ? std::move(*cached) : WeylTable(rs);
  const int before = cached ? t.max_length() : -1;
  t.extend(rs, max_length);
  if (t.max_length() > before) {
    try {
      write_weyl_cache(file, t);
    } catch (const std::exception& ex) {
      std::cerr << "warning: could not write Weyl cache: " << ex.what() << '\n';
    }
  }
  return t.max_length() > max_length ? t.truncated(max_length) : t;
}

}  // namespace gksum
