#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <unistd.h>

#include <gksum/weyl_cache.hpp>

using namespace gksum;
namespace fs = std::filesystem;

namespace {

class CacheDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gksum_cache_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

void expect_same(const WeylTable& a, const WeylTable& b) {
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a.max_length(), b.max_length());
  EXPECT_EQ(a.complete(), b.complete());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

}  // namespace

TEST_F(CacheDir, RoundTrip) {
  const auto rs = build_root_system('A', 2);
  const auto t = enumerate_finite(rs);
  const auto file = weyl_cache_file(dir_, rs.desc);
  EXPECT_EQ(file.filename(), "weyl_A2.bin");
  EXPECT_EQ(weyl_cache_file(dir_, build_root_system('A', 2, true).desc).filename(), "weyl_A2_affine.bin");
  write_weyl_cache(file, t);
  const auto back = read_weyl_cache(file, rs.desc);
  ASSERT_TRUE(back);
  EXPECT_EQ(back->size(), 6u);
  expect_same(*back, t);
  std::string why;
  EXPECT_FALSE(read_weyl_cache(file, build_root_system('B', 2).desc, &why));
  EXPECT_NE(why.find("holds A2"), std::string::npos);
}

TEST_F(CacheDir, StaleVersionIsRejected) {
  const auto rs = build_root_system('G', 2);
  const auto file = weyl_cache_file(dir_, rs.desc);
  write_weyl_cache(file, enumerate_finite(rs));
  {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(8);
    const char bumped[4] = {static_cast<char>(kWeylCacheVersion + 1), 0, 0, 0};
    f.write(bumped, 4);
  }
  std::string why;
  EXPECT_FALSE(read_weyl_cache(file, rs.desc, &why));
  EXPECT_NE(why.find("stale"), std::string::npos);
  // load_or_build rebuilds and rewrites a readable file.
  const auto t = load_or_build(rs, 6, dir_);
  EXPECT_EQ(t.size(), 12u);
  EXPECT_TRUE(read_weyl_cache(file, rs.desc));
}

TEST_F(CacheDir, CorruptFilesAreRejected) {
  const auto rs = build_root_system('B', 2);
  const auto file = weyl_cache_file(dir_, rs.desc);
  write_weyl_cache(file, enumerate_finite(rs));
  const auto size = fs::file_size(file);
  fs::resize_file(file, size - 5);
  std::string why;
  EXPECT_FALSE(read_weyl_cache(file, rs.desc, &why));
  {
    std::ofstream f(file, std::ios::binary | std::ios::trunc);
    f << "not a cache";
  }
  EXPECT_FALSE(read_weyl_cache(file, rs.desc, &why));
  EXPECT_EQ(why, "bad magic");
  EXPECT_FALSE(read_weyl_cache(dir_ / "missing.bin", rs.desc));
  expect_same(load_or_build(rs, 4, dir_), enumerate_up_to_length(rs, 4));
}

TEST_F(CacheDir, ExtensionMatchesFreshEnumeration) {
  const auto rs = build_root_system('A', 2, true);
  const auto file = weyl_cache_file(dir_, rs.desc);
  const auto short_t = load_or_build(rs, 3, dir_);
  expect_same(short_t, enumerate_up_to_length(rs, 3));
  const auto longer = load_or_build(rs, 7, dir_);
  expect_same(longer, enumerate_up_to_length(rs, 7));
  const auto on_disk = read_weyl_cache(file, rs.desc);
  ASSERT_TRUE(on_disk);
  EXPECT_EQ(on_disk->max_length(), 7);
  // A shorter request is served by truncating the longer file.
  expect_same(load_or_build(rs, 5, dir_), enumerate_up_to_length(rs, 5));
  EXPECT_EQ(read_weyl_cache(file, rs.desc)->max_length(), 7);
}

TEST(CacheEnv, DirectoryFromEnvironment) {
  ::setenv("GKSUM_CACHE_DIR", "/tmp/somewhere", 1);
  EXPECT_EQ(default_cache_dir(), fs::path("/tmp/somewhere"));
  ::unsetenv("GKSUM_CACHE_DIR");
  EXPECT_EQ(default_cache_dir(), fs::path(".gksum-cache"));
}
