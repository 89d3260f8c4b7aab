#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "valleyforge/cli.hpp"

using namespace valleyforge;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) v.push_back(line);
  return v;
}

class TempFile {
 public:
  explicit TempFile(const std::string& stem)
      : path_(std::filesystem::temp_directory_path() /
              (stem + "-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
               "-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".json")) {
    std::filesystem::remove(path_);
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string str() const { return path_.string(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(CliCount, Methods) {
  for (const char* m : {"brute", "eco", "rule", "series"}) {
    const auto r = run({"count", "--h", "4", "--k", "3", "--n", "5", "--method", m});
    EXPECT_EQ(r.code, 0) << m << r.err;
    EXPECT_EQ(r.out, "41\n") << m;
  }
  EXPECT_EQ(run({"count", "--h", "4", "--k", "3", "--n", "5"}).out, "41\n");
}

TEST(CliCount, BruteWorksOutsideEcoSupport) {
  const auto r = run({"count", "--h", "2", "--k", "3", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "7\n");  // 8 paths of height <= 2, minus UUDUDUDD
}

TEST(CliCount, UsageErrors) {
  EXPECT_EQ(run({"count", "--h", "3", "--k", "3", "--n", "4", "--method", "eco"}).code, 2);
  EXPECT_EQ(run({"count", "--h", "4", "--k", "3", "--n", "15"}).code, 2);
  EXPECT_EQ(run({"count", "--h", "4", "--k", "1", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"count", "--h", "4", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"count", "--h", "4", "--k", "3", "--n", "3", "--method", "magic"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  const auto r = run({"count", "--h", "3", "--k", "3", "--n", "4", "--method", "eco"});
  EXPECT_NE(r.err.find("UnsupportedParams"), std::string::npos) << r.err;
}

TEST(CliCount, CapRaisesTheLimit) {
  EXPECT_EQ(run({"--cap", "16", "count", "--h", "3", "--k", "2", "--n", "15"}).code, 0);
  EXPECT_EQ(run({"--cap", "3", "count", "--h", "4", "--k", "3", "--n", "4"}).code, 2);
  // Series and rule are not exhaustive, so the cap does not apply to them.
  EXPECT_EQ(run({"count", "--h", "4", "--k", "3", "--n", "40", "--method", "series"}).code, 0);
}

TEST(CliCount, CrossCheck) {
  const auto r = run({"count", "--h", "5", "--k", "4", "--n", "10", "--cross-check"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.err.empty());
  // Beyond the cap only the polynomial routes are compared.
  EXPECT_EQ(run({"count", "--h", "5", "--k", "4", "--n", "30", "--method", "rule",
                 "--cross-check"})
                .code,
            0);
}

TEST(CliCount, JsonAndCsv) {
  auto r = run({"--format", "json", "count", "--h", "4", "--k", "3", "--n", "7"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], "358");
  EXPECT_EQ(j["method"], "brute");
  EXPECT_EQ(run({"--json", "count", "--h", "4", "--k", "3", "--n", "7"}).out, r.out);
  r = run({"--format", "csv", "count", "--h", "4", "--k", "3", "--n", "7"});
  EXPECT_EQ(r.out, "h,k,n,method,count\n4,3,7,brute,358\n");
}

TEST(CliCount, Deterministic) {
  const std::vector<std::string> args = {"count", "--h", "6", "--k", "4", "--n", "11"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliGenerate, Plain) {
  const auto r = run({"generate", "--h", "4", "--k", "3", "--n", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out),
            (std::vector<std::string>{"UDUDUD", "UDUUDD", "UUDDUD", "UUDUDD", "UUUDDD"}));
  EXPECT_EQ(lines(run({"generate", "--h", "4", "--k", "3", "--n", "7"}).out).size(), 358u);
}

TEST(CliGenerate, JsonLinesAndCsv) {
  auto r = run({"--json", "generate", "--h", "4", "--k", "3", "--n", "2"});
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  const auto first = nlohmann::json::parse(ls[0]);
  EXPECT_EQ(first["word"], "UDUD");
  EXPECT_EQ(first["height"], 1);
  EXPECT_EQ(first["label"], "(2)");
  EXPECT_EQ(nlohmann::json::parse(ls[1])["label"], "(3)");

  r = run({"--format", "csv", "generate", "--h", "4", "--k", "3", "--n", "1"});
  EXPECT_EQ(r.out, "word,height,label\nUD,1,(2)\n");
}

TEST(CliGenerate, Errors) {
  EXPECT_EQ(run({"generate", "--h", "2", "--k", "2", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"generate", "--h", "4", "--k", "3", "--n", "15"}).code, 2);
}

TEST(CliSeries, Plain) {
  const auto r = run({"series", "--h", "4", "--k", "3", "--order", "7"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 1 2 5 14 41 121 358\n");
}

TEST(CliSeries, Components) {
  const auto r = run({"series", "--h", "4", "--k", "3", "--order", "4", "--show-components"});
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 6u);
  EXPECT_EQ(ls[1], "S^(4,3) = 1 - 4x + 3x^2 + x^4 - x^5");
  EXPECT_EQ(ls[2], "F_1 = 1 0 0 0 0");
  EXPECT_EQ(ls[5].substr(0, 14), "F_4 = 0 0 0 1 ");
}

TEST(CliSeries, JsonAndCsv) {
  auto r = run({"--json", "series", "--h", "5", "--k", "2", "--order", "6", "--show-components"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coefficients"].size(), 7u);
  EXPECT_EQ(j["coefficients"][5], "42");
  EXPECT_EQ(j["F"].size(), 5u);
  EXPECT_TRUE(j["S"].is_array());

  r = run({"--format", "csv", "series", "--h", "4", "--k", "3", "--order", "2"});
  EXPECT_EQ(r.out, "n,D\n0,1\n1,1\n2,2\n");
}

TEST(CliIdentity, FullRange) {
  const auto r = run({"identity", "--h-min", "4", "--h-max", "64"});
  EXPECT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 61u);
  EXPECT_EQ(ls[0], "h=4 n=3..3 pass");
  EXPECT_EQ(ls[1], "h=5 n=3..4 pass");
}

TEST(CliIdentity, JsonSchema) {
  const auto r = run({"--json", "identity", "--h-min", "6", "--h-max", "7"});
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["h"], 6);
  EXPECT_TRUE(j[0]["k"].is_null());
  EXPECT_EQ(j[0]["n_range"], nlohmann::json::array({4, 5}));
  EXPECT_TRUE(j[0]["failures"].empty());
  EXPECT_TRUE(j[0]["passed"].get<bool>());
}

TEST(CliIdentity, RejectsSmallHeights) {
  EXPECT_EQ(run({"identity", "--h-min", "3", "--h-max", "5"}).code, 2);
  EXPECT_EQ(run({"identity", "--h-min", "6", "--h-max", "5"}).code, 2);
}

TEST(CliVerify, SmallGrid) {
  const auto r = run({"verify", "--h", "4..5", "--k", "3", "--n-max", "6", "--workers", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 1u + 2 * 7);
  EXPECT_EQ(ls[0], "h k n eco rule series brute status");
  EXPECT_EQ(ls[6], "4 3 5 41 41 41 41 ok");
}

TEST(CliVerify, BadRange) {
  EXPECT_EQ(run({"verify", "--h", "7..4"}).code, 2);
  EXPECT_EQ(run({"verify", "--h", "x"}).code, 2);
  EXPECT_EQ(run({"verify", "--h", "3", "--k", "3"}).code, 2);
}

TEST(CliCache, TransparentAndPersistent) {
  TempFile file("valleyforge-cache");
  const std::vector<std::string> count = {"--cache", file.str(), "count", "--h", "5",
                                          "--k", "3", "--n", "9"};
  const auto cold = run(count);
  ASSERT_EQ(cold.code, 0);
  ASSERT_TRUE(std::filesystem::exists(file.path()));
  const auto warm = run(count);
  EXPECT_EQ(warm.out, cold.out);
  EXPECT_EQ(warm.out, run({"count", "--h", "5", "--k", "3", "--n", "9"}).out);

  std::ifstream is(file.path());
  const auto j = nlohmann::json::parse(is);
  EXPECT_EQ(j["version"], version);
  EXPECT_EQ(j["entries"]["5:3:9"], cold.out.substr(0, cold.out.size() - 1));

  const std::vector<std::string> verify = {"--cache", file.str(), "verify", "--h", "4",
                                           "--k", "3..4", "--n-max", "8"};
  const auto v1 = run(verify);
  const auto v2 = run(verify);
  EXPECT_EQ(v1.code, 0);
  EXPECT_EQ(v1.out, v2.out);
}

TEST(CliCache, StaleVersionIsIgnored) {
  TempFile file("valleyforge-stale");
  {
    std::ofstream os(file.path());
    os << R"({"version": "0.0.1", "entries": {"4:3:5": "999"}})";
  }
  const auto r = run({"--cache", file.str(), "count", "--h", "4", "--k", "3", "--n", "5"});
  EXPECT_EQ(r.out, "41\n");
}

TEST(CliCache, EnvironmentVariable) {
  TempFile file("valleyforge-env");
  ::setenv("VALLEYFORGE_CACHE", file.str().c_str(), 1);
  const auto r = run({"count", "--h", "4", "--k", "3", "--n", "6"});
  ::unsetenv("VALLEYFORGE_CACHE");
  EXPECT_EQ(r.out, "121\n");
  EXPECT_TRUE(std::filesystem::exists(file.path()));
}

TEST(Cli, VersionAndHelp) {
  auto r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(version), std::string::npos);
  r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count"), std::string::npos);
}
