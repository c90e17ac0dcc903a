#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "zerosum/cache.hpp"

using namespace zerosum;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("zerosum_cache_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Cache, Sha256KnownVector) {
  EXPECT_EQ(cache::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(cache::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Cache, RoundTrip) {
  const auto dir = fresh_dir("roundtrip");
  cache::Cache c(dir);
  const auto rec = cache::make_record("davenport", "D:8", R"({"davenport":9})");
  c.store(rec);
  const auto got = c.lookup("davenport", "D:8");
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ(got->payload, rec.payload);
  EXPECT_EQ(got->content_hash, rec.content_hash);
  EXPECT_FALSE(c.lookup("davenport", "D:9").has_value());
  EXPECT_TRUE(fs::exists(dir / "davenport-D:8-1"));
  EXPECT_EQ(c.all().size(), 1U);
  fs::remove_all(dir);
}

TEST(Cache, OverwriteReplaces) {
  const auto dir = fresh_dir("overwrite");
  cache::Cache c(dir);
  c.store(cache::make_record("extremal", "Q:3", "one"));
  c.store(cache::make_record("extremal", "Q:3", "two"));
  EXPECT_EQ(c.lookup("extremal", "Q:3")->payload, "two");
  EXPECT_EQ(c.all().size(), 1U);
  fs::remove_all(dir);
}

TEST(Cache, CorruptRecordIsIgnoredWithWarning) {
  const auto dir = fresh_dir("corrupt");
  std::ostringstream warnings;
  cache::Cache c(dir, &warnings);
  c.store(cache::make_record("davenport", "C:5", "payload"));
  { std::ofstream(dir / "davenport-C:5-1") << "{not json\n"; }
  EXPECT_FALSE(c.lookup("davenport", "C:5").has_value());
  EXPECT_NE(warnings.str().find("corrupt"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cache, HashMismatchIsIgnored) {
  const auto dir = fresh_dir("hash");
  std::ostringstream warnings;
  cache::Cache c(dir, &warnings);
  auto rec = cache::make_record("davenport", "C:5", "payload");
  rec.content_hash = cache::sha256_hex("something else");
  c.store(rec);
  EXPECT_FALSE(c.lookup("davenport", "C:5").has_value());
  EXPECT_NE(warnings.str().find("hash"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cache, UncreatableDirectoryThrows) {
  const auto dir = fresh_dir("blocked");
  { std::ofstream(dir) << "a file, not a directory"; }
  EXPECT_THROW(cache::Cache(dir / "sub"), Error);
  fs::remove_all(dir);
}
