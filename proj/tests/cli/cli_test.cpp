#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcycles/app.hpp"
#include "kcycles/cache.hpp"

namespace {

namespace fs = std::filesystem;
using kcycles::cli::run;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "kcycles");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("kcycles-cli-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    ::unsetenv("KCYCLES_CACHE_DIR");
    ::unsetenv("KCYCLES_CAPS");
  }
};

TEST_F(Cli, TreepolyText) {
  const auto r = invoke({"--format", "text", "treepoly", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(x0+x1)*x2\n");
}

TEST_F(Cli, TreepolyJsonRoundTripsThroughRoutes) {
  const auto rec = invoke({"treepoly", "3"});
  const auto brute = invoke({"treepoly", "3", "--route", "bruteforce"});
  ASSERT_EQ(rec.code, 0);
  ASSERT_EQ(brute.code, 0);
  EXPECT_EQ(nlohmann::json::parse(rec.out).at("result"), nlohmann::json::parse(brute.out).at("result"));
  EXPECT_EQ(nlohmann::json::parse(rec.out).at("k"), 3);
}

TEST_F(Cli, CoefficientQueries) {
  EXPECT_EQ(invoke({"coeff", "b", "--lambda", "1,1"}).out, "29/720\n");
  EXPECT_EQ(invoke({"coeff", "a", "--lambda", "1,1,1", "--mu", "3"}).out, "20736\n");
  EXPECT_EQ(invoke({"coeff", "b", "--lambda", "2,1", "--mu", "2,1"}).out, "-1/1440\n");
  const auto doc = nlohmann::json::parse(invoke({"--format", "json", "coeff", "b", "--lambda", "1"}).out);
  EXPECT_EQ(doc.at("value"), "1/12");
}

TEST_F(Cli, CupAndWitten) {
  const auto cup = nlohmann::json::parse(invoke({"cup", "--lambda", "1", "--mu", "1"}).out);
  EXPECT_EQ(cup.at("terms").dump(), R"({"1,1":"2","2":"29/5"})");
  const auto w = nlohmann::json::parse(invoke({"witten", "--lambda", "1,1,1"}).out);
  EXPECT_EQ(w.at("terms").at("3"), "20736");
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kcycles::cli::kExitUsage);
  EXPECT_EQ(invoke({"nonsense"}).code, kcycles::cli::kExitUsage);
  EXPECT_EQ(invoke({"coeff", "c", "--lambda", "1"}).code, kcycles::cli::kExitUsage);
  EXPECT_EQ(invoke({"coeff", "b", "--lambda", "1,0"}).code, kcycles::cli::kExitUsage);
  EXPECT_EQ(invoke({"--format", "yaml", "treepoly", "1"}).code, kcycles::cli::kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kcycles::cli::kExitOk);
}

TEST_F(Cli, CapExceededHasItsOwnExitCode) {
  const auto r = invoke({"--cap-trees", "2", "treepoly", "3", "--route", "bruteforce"});
  EXPECT_EQ(r.code, kcycles::cli::kExitCap);
  EXPECT_NE(r.err.find("enumeration cap 'trees'"), std::string::npos);
  EXPECT_NE(r.err.find("--cap-trees"), std::string::npos);
}

TEST_F(Cli, FlagOverridesEnvironmentCaps) {
  ::setenv("KCYCLES_CAPS", "trees=1", 1);
  EXPECT_EQ(invoke({"treepoly", "2", "--route", "bruteforce"}).code, kcycles::cli::kExitCap);
  EXPECT_EQ(invoke({"--cap-trees", "2", "treepoly", "2", "--route", "bruteforce"}).code, kcycles::cli::kExitOk);
  ::unsetenv("KCYCLES_CAPS");
}

TEST_F(Cli, OutWritesFile) {
  TempDir dir;
  const fs::path file = dir.path() / "t.txt";
  const auto r = invoke({"--format", "text", "--out", file.string(), "treepoly", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(file);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), "(x0+x1)*x2\n");
  for (const auto& e : fs::directory_iterator(dir.path())) EXPECT_EQ(e.path().filename(), "t.txt");
}

TEST_F(Cli, OutCreatesParentDirectories) {
  TempDir dir;
  const fs::path file = dir.path() / "a" / "b" / "t.json";
  EXPECT_EQ(invoke({"--out", file.string(), "treepoly", "1"}).code, 0);
  EXPECT_TRUE(fs::exists(file));
}

TEST_F(Cli, OutBelowARegularFileIsAnIoError) {
  TempDir dir;
  { std::ofstream(dir.path() / "plain") << "x"; }
  const auto r = invoke({"--out", (dir.path() / "plain" / "file").string(), "treepoly", "1"});
  EXPECT_EQ(r.code, kcycles::cli::kExitIo);
}

TEST_F(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"treepoly", "2", "--variant", "pfamily", "--format", "text"},
           {"table", "3"},
           {"--format", "latex", "cup", "--lambda", "2", "--mu", "1"},
           {"oracle", "xe", "X1", "3", "4"},
           {"verify"}}) {
    const auto first = invoke(args);
    const auto second = invoke(args);
    EXPECT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(first.out, second.out);
  }
}

TEST_F(Cli, CacheHitReturnsSameBytes) {
  TempDir dir;
  const auto cold = invoke({"--cache-dir", dir.path().string(), "table", "3"});
  ASSERT_EQ(cold.code, 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir.path())) {
    ++files;
    EXPECT_EQ(e.path().extension(), ".json");
    EXPECT_NE(e.path().filename().string().front(), '.');
  }
  EXPECT_EQ(files, 1u);
  const auto warm = invoke({"--cache-dir", dir.path().string(), "table", "3"});
  EXPECT_EQ(cold.out, warm.out);
}

TEST_F(Cli, CacheDirFromEnvironment) {
  TempDir dir;
  ::setenv("KCYCLES_CACHE_DIR", dir.path().c_str(), 1);
  EXPECT_EQ(invoke({"treepoly", "2"}).code, 0);
  ::unsetenv("KCYCLES_CACHE_DIR");
  EXPECT_FALSE(fs::is_empty(dir.path()));
}

TEST_F(Cli, VerifyDetectsTamperedCache) {
  TempDir dir;
  ASSERT_EQ(invoke({"--cache-dir", dir.path().string(), "table", "2"}).code, 0);
  ASSERT_EQ(invoke({"--cache-dir", dir.path().string(), "verify"}).code, 0);

  fs::path entry;
  for (const auto& e : fs::directory_iterator(dir.path())) entry = e.path();
  nlohmann::json doc;
  {
    std::ifstream in(entry);
    in >> doc;
  }
  doc["result"]["b"][0][0] = "1/7";
  {
    std::ofstream out(entry);
    out << doc.dump();
  }
  const auto r = invoke({"--cache-dir", dir.path().string(), "verify"});
  EXPECT_EQ(r.code, kcycles::cli::kExitVerifyFailed);
  EXPECT_NE(r.out.find("FAIL cache."), std::string::npos);
}

TEST_F(Cli, VerifyFlagsUnreadableCacheEntry) {
  TempDir dir;
  {
    std::ofstream out(dir.path() / "garbage.json");
    out << "{ not json";
  }
  EXPECT_EQ(invoke({"--cache-dir", dir.path().string(), "verify"}).code, kcycles::cli::kExitVerifyFailed);
}

TEST_F(Cli, StaleSchemaIsRecomputedNotTrusted) {
  TempDir dir;
  kcycles::cli::ResultCache cache(dir.path());
  const nlohmann::json params = {{"weight", 1}};
  cache.store("probe", params, nlohmann::json{{"x", 1}});
  ASSERT_TRUE(cache.load("probe", params).has_value());
  fs::path entry;
  for (const auto& e : fs::directory_iterator(dir.path())) entry = e.path();
  nlohmann::json doc;
  {
    std::ifstream in(entry);
    in >> doc;
  }
  doc["schema"] = kcycles::cli::kCacheSchemaVersion + 1;
  {
    std::ofstream out(entry);
    out << doc.dump();
  }
  EXPECT_FALSE(cache.load("probe", params).has_value());
  EXPECT_FALSE(cache.load("probe", nlohmann::json{{"weight", 2}}).has_value());
}

TEST_F(Cli, OracleSubcommand) {
  const auto r = invoke({"oracle", "counting", "5", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("equal"), std::string::npos);
  EXPECT_EQ(invoke({"oracle", "treepoly", "2"}).code, 0);
  EXPECT_EQ(invoke({"oracle", "shuffle-sum", "3,1,3"}).code, 0);
}

}  // namespace
