#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;
using chevh1::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

const fs::path kGolden = CHEVH1_GOLDEN_DIR;

fs::path scratch_dir(const std::string& tag) {
  const fs::path d = fs::temp_directory_path() / ("chevh1-cli-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(Cli, Goldens) {
  const std::pair<std::vector<std::string>, const char*> cases[] = {
      {{"h1", "--type", "F", "--rank", "4", "-p", "13", "--lambda", "0,0,0,2", "--format", "text"}, "h1_F4_p13_2w4.txt"},
      {{"h1", "--type", "E", "--rank", "7", "-p", "7", "--lambda", "0,0,0,0,0,1,0"}, "h1_E7_p7_w6.json"},
      {{"hasse", "--type", "F", "--rank", "4", "--fundamental", "2"}, "hasse_F4_w2.dot"},
      {{"weights", "--type", "B", "--rank", "2", "--lambda", "0,1"}, "weights_B2_w2.txt"},
      {{"weights", "--type", "G", "--rank", "2", "--lambda", "0,1", "--dominant-only"}, "weights_G2_w2_dominant.txt"},
      {{"linkage", "--type", "E", "--rank", "8", "-p", "31", "--lambda", "0,0,0,0,0,0,0,2"}, "linkage_E8_p31_2w8.json"},
  };
  for (const auto& [args, file] : cases) {
    const Outcome o = call(args);
    EXPECT_EQ(o.code, 0) << file << '\n' << o.err;
    EXPECT_EQ(o.out, slurp(kGolden / file)) << file;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"h1", "--type", "E", "--rank", "7", "-p", "5", "--lambda", "0,0,0,0,0,0,2"}).code, 3);
  EXPECT_EQ(call({"h1", "--type", "E", "--rank", "7", "-p", "2", "--lambda", "0,0,0,0,0,0,1"}).code, 4);
  EXPECT_EQ(call({"h1", "--type", "E", "--rank", "7", "-p", "5", "--lambda", "0,1"}).code, 1);
  EXPECT_EQ(call({"h1", "--type", "Q", "--rank", "7", "-p", "5", "--lambda", "0"}).code, 1);
  EXPECT_EQ(call({"h1", "--type", "A", "--rank", "2", "-p", "6", "--lambda", "1,0"}).code, 1);
  EXPECT_EQ(call({"weights", "--type", "A", "--rank", "3", "--lambda", "1,0,0"}).code, 1);
  EXPECT_EQ(call({"weights", "--type", "A", "--rank", "3", "--lambda", "1,0,0", "--force"}).code, 0);
  EXPECT_EQ(call({"frobnicate"}).code, 1);
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"verify", "--suite", "g2"}).code, 0);
  EXPECT_EQ(call({"verify", "--suite", "linkage"}).code, 2);
}

TEST(Cli, VerifyJsonAndMarkdown) {
  const Outcome json = call({"verify", "--suite", "s0"});
  ASSERT_EQ(json.code, 0);
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["schema_version"], "1.0");
  EXPECT_TRUE(j["result"]["passed"].get<bool>());
  EXPECT_FALSE(j["result"]["checks"][0].contains("elapsed_seconds"));
  const Outcome md = call({"verify", "--suite", "s0", "--report", "md"});
  EXPECT_NE(md.out.find("# Verification report"), std::string::npos);
  const Outcome timed = call({"verify", "--suite", "s0", "--timings"});
  EXPECT_TRUE(nlohmann::json::parse(timed.out)["result"]["checks"][0].contains("elapsed_seconds"));
}

TEST(Cli, OutFileMatchesStdout) {
  const fs::path d = scratch_dir("out");
  const std::vector<std::string> base{"hasse", "--type", "G", "--rank", "2", "--format", "json"};
  const Outcome direct = call(base);
  auto with_out = base;
  with_out.insert(with_out.end(), {"--out", (d / "g2.json").string()});
  const Outcome filed = call(with_out);
  EXPECT_EQ(filed.code, 0);
  EXPECT_TRUE(filed.out.empty());
  EXPECT_EQ(slurp(d / "g2.json"), direct.out);
  fs::remove_all(d);
}

TEST(Cli, CacheReturnsIdenticalBytes) {
  const fs::path d = scratch_dir("cache");
  ::unsetenv("CHEVH1_CACHE");
  const std::vector<std::string> args{"hasse", "--type", "E", "--rank", "7", "--cache", d.string()};
  const Outcome first = call(args);
  ASSERT_EQ(first.code, 0);
  EXPECT_FALSE(fs::is_empty(d));
  const Outcome second = call(args);
  EXPECT_EQ(second.out, first.out);
  const Outcome verify1 = call({"verify", "--suite", "e8", "--cache", d.string()});
  const Outcome verify2 = call({"verify", "--suite", "e8", "--cache", d.string()});
  EXPECT_EQ(verify1.out, verify2.out);
  fs::remove_all(d);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"verify", "--suite", "restriction", "--max-rank", "4", "--primes", "2..7", "--jobs", "3"};
  EXPECT_EQ(call(args).out, call(args).out);
}
