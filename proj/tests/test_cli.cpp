#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "zerosum/cli.hpp"

namespace fs = std::filesystem;
using zerosum::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("zerosum_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) + "_" +
            std::to_string(::getpid()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result call(std::vector<std::string> args) {
    args.insert(args.begin(), {"--cache-dir", dir_.string()});
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, FreeCheck) {
  const auto r = call({"free", "check", "--group", "D:4", "--seq", "[y, y, x*y^2]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "free: true\n");
  EXPECT_EQ(call({"free", "check", "--group", "D:4", "--seq", "[x, x]"}).out, "free: false\n");
}

TEST_F(CliTest, FreeCheckFromFile) {
  fs::create_directories(dir_);
  const auto file = dir_ / "seqs.txt";
  { std::ofstream(file) << "[y, y]\n\n[x, x]\n"; }
  const auto r = call({"free", "check", "--group", "D:4", "--seq-file", file.string(), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.at("results").size(), 2U);
  EXPECT_TRUE(j["results"][0]["free"].get<bool>());
  EXPECT_FALSE(j["results"][1]["free"].get<bool>());
}

TEST_F(CliTest, DavenportAndCache) {
  auto r = call({"davenport", "--group", "Q:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("davenport: 7\n"), std::string::npos);
  r = call({"davenport", "--group", "Q:3", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("davenport"), 7);
  EXPECT_EQ(j.at("nodes"), 0);
  EXPECT_TRUE(j.at("cached").get<bool>());
  EXPECT_EQ(j.at("schema_version"), 1);
  r = call({"--no-cache", "davenport", "--group", "Q:3", "--json"});
  EXPECT_FALSE(nlohmann::json::parse(r.out).contains("cached"));
}

TEST_F(CliTest, CorruptCacheRecomputes) {
  ASSERT_EQ(call({"davenport", "--group", "D:5"}).code, 0);
  { std::ofstream(dir_ / "davenport-D:5-1") << "garbage\n"; }
  const auto r = call({"davenport", "--group", "D:5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("davenport: 6"), std::string::npos);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, BudgetExhaustedExitCode) {
  const auto r = call({"davenport", "--group", "CxC:6,6", "--budget", "500"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("unknown above length"), std::string::npos);
  EXPECT_TRUE(call({"report"}).out.find("no results") != std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"bogus"}).code, 2);
  EXPECT_EQ(call({"davenport"}).code, 2);
  const auto bad = call({"davenport", "--group", "Z:3"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("Z"), std::string::npos);
  EXPECT_EQ(call({"verify", "--target", "nope", "--param", "3"}).code, 2);
  EXPECT_EQ(call({"verify", "--target", "dihedral", "--param", "x..y"}).code, 2);
  EXPECT_EQ(call({"--format", "xml", "report"}).code, 2);
  EXPECT_EQ(call({"free", "check", "--group", "D:4", "--seq", "[q]"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST_F(CliTest, VerifyVerdictsAndExitCodes) {
  auto r = call({"verify", "--target", "dihedral", "--param", "3..5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("exact match"), std::string::npos);
  r = call({"verify", "--target", "dicyclic", "--param", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "documented-discrepancy");
  EXPECT_EQ(j.at("extra").size(), 6U);
  r = call({"verify", "--target", "metacyclic", "--param", "7,3,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(call({"verify", "--target", "weighted", "--param", "8"}).code, 0);
  EXPECT_EQ(call({"verify", "--target", "cyclic-structure", "--param", "5..7"}).code, 0);
  EXPECT_EQ(call({"verify", "--target", "minzero", "--param", "CxC:2,4"}).code, 0);
}

TEST_F(CliTest, FailureVerdictExitsOne) {
  // A hand-written cached report with a missing sequence must exit 1.
  zerosum::cache::Cache c(dir_);
  const nlohmann::json payload{{"schema_version", 1}, {"kind", "verify"}, {"target", "dihedral"},
                               {"group", "D:4"},      {"family", "f"},    {"davenport", 5},
                               {"enumerated_count", 7}, {"predicted_count", 8}, {"missing", {"[y]"}},
                               {"extra", nlohmann::json::array()}, {"witnesses", nlohmann::json::array()},
                               {"notes", nlohmann::json::array()}, {"verdict", "failure"},
                               {"nodes", 1}, {"millis", 0}};
  c.store(zerosum::cache::make_record("verify", "dihedral@D:4", payload.dump()));
  EXPECT_EQ(call({"verify", "--target", "dihedral", "--param", "4"}).code, 1);
}

TEST_F(CliTest, ReportRows) {
  ASSERT_EQ(call({"verify", "--target", "dihedral", "--param", "4..8"}).code, 0);
  auto r = call({"--format", "csv", "report"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 6U);
  EXPECT_EQ(rows[0], zerosum::io::kCsvHeader);
  EXPECT_EQ(rows[1].rfind("D:4,5,8,exact match,0,0,", 0), 0U);
  EXPECT_EQ(rows[5].rfind("D:8,9,32,exact match,0,0,", 0), 0U);
  r = call({"report"});
  EXPECT_NE(r.out.find("D:6"), std::string::npos);
}

TEST_F(CliTest, EmptyReport) {
  const auto r = call({"report"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("no results"), std::string::npos);
}

TEST_F(CliTest, ReachAndSample) {
  auto r = call({"reach", "--group", "D:4", "--seq", "[y, y, x]", "--targets", "[1, x]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hit: true"), std::string::npos);
  r = call({"reach", "--group", "D:4", "--seq", "[y, y, x]", "--oracle"});
  EXPECT_NE(r.out.find("size: 6"), std::string::npos);
  r = call({"--rng-seed", "5", "reach", "--group", "Q:2", "--sample", "100"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "agree: 100/100 (rng seed 5)\n");
}

TEST_F(CliTest, GroupInfo) {
  auto r = call({"group", "info", "--group", "Q:2", "--quaternion"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order:    8"), std::string::npos);
  EXPECT_NE(r.out.find("-k"), std::string::npos);
  EXPECT_EQ(call({"group", "info", "--group", "Q:3", "--quaternion"}).code, 2);
}

TEST(CliProcess, ExitCodesFromBinary) {
  const std::string exe = ZEROSUM_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((exe + " --no-cache " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("davenport --group Q:3"), 0);
  EXPECT_EQ(status("davenport --group Z:3"), 2);
  EXPECT_EQ(status("davenport --group CxC:6,6 --budget 500"), 3);
  EXPECT_EQ(status("verify --target dicyclic --param 3"), 0);
}
