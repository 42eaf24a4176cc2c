#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "coarse_menger/cli.hpp"
#include "coarse_menger/report.hpp"

using namespace coarse_menger;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = parse_and_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cm_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_F(CliTest, GenWritesGraphAndLabels) {
  CliRun r = run({"gen", "--ell", "1", "-o", file("g.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json report = Json::parse(r.out);
  EXPECT_EQ(report["command"], "gen");
  EXPECT_EQ(report["outcome"]["vertices"], 99);
  EXPECT_GE(report["elapsed_ms"], 0);
  EXPECT_EQ(slurp(file("g.txt")).rfind("p 99 ", 0), 0u);
  Json labels = Json::parse(slurp(file("g.labels.json")));
  EXPECT_EQ(labels["vertex_count"], 99);
}

TEST_F(CliTest, GenToStdoutRoundTrips) {
  CliRun r = run({"gen", "--ell", "1"});
  ASSERT_EQ(r.code, kExitOk);
  write("g.txt", r.out);
  CliRun again = run({"gen", "--ell", "1", "-o", file("h.txt")});
  ASSERT_EQ(again.code, kExitOk);
  EXPECT_EQ(slurp(file("h.txt")), r.out);
}

TEST_F(CliTest, SolveReportsRadius) {
  std::string text = "p 1000 999\n";
  for (int i = 0; i < 999; ++i) text += "e " + std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  text += "s 0\nt 999\n";
  const std::string path = write("line.txt", text);
  CliRun r = run({"solve", "-i", path, "--c", "7", "--ell", "19", "--trace", file("trace.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json report = Json::parse(r.out);
  EXPECT_EQ(report["outcome"], "center");
  EXPECT_EQ(report["radius"], 161);
  EXPECT_EQ(report["vertex"], 0);
  EXPECT_TRUE(Json::parse(slurp(file("trace.json"))).contains("frame"));
}

TEST_F(CliTest, SearchPathsOnCounterexample) {
  ASSERT_EQ(run({"gen", "--ell", "1", "-o", file("g.txt")}).code, kExitOk);
  CliRun three = run({"search-paths", "-i", file("g.txt"), "-k", "3", "-d", "3", "--budget", "100000000"});
  ASSERT_EQ(three.code, kExitOk);
  EXPECT_EQ(Json::parse(three.out)["result"], "none_exists");
  CliRun tiny = run({"search-paths", "-i", file("g.txt"), "-k", "3", "-d", "3", "--budget", "5"});
  EXPECT_EQ(tiny.code, kExitNegative);
  EXPECT_EQ(Json::parse(tiny.out)["result"], "budget_exhausted");
}

TEST_F(CliTest, VerifySeparator) {
  const std::string path = write("p.txt", "p 5 4\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ns 0\nt 4\n");
  EXPECT_EQ(run({"verify-separator", "-i", path, "--x", "2", "--radius", "0"}).code, kExitOk);
  ASSERT_EQ(run({"gen", "--ell", "1", "-o", file("g.txt")}).code, kExitOk);
  CliRun bad = run({"verify-separator", "-i", file("g.txt"), "--x", "0,5", "--radius", "1"});
  EXPECT_EQ(bad.code, kExitNegative);
  EXPECT_EQ(Json::parse(bad.out)["outcome"], "escapes");
  CliRun search = run({"verify-separator", "-i", file("g.txt"), "--radius", "1"});
  EXPECT_EQ(search.code, kExitOk);
  EXPECT_EQ(Json::parse(search.out)["outcome"], "none");
  EXPECT_EQ(run({"verify-separator", "-i", path, "--x", "9"}).code, kExitUsage);
}

TEST_F(CliTest, VerifyConstruction) {
  CliRun r = run({"verify-construction", "--k", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(Json::parse(r.out)["outcome"]["violations"], 0);
  EXPECT_EQ(run({"verify-construction", "--k", "9"}).code, kExitUsage);
}

TEST_F(CliTest, ExportDot) {
  CliRun r = run({"export-dot", "--ell", "1", "--tree-path"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("graph G {", 0), 0u);
  EXPECT_NE(r.out.find("style=bold"), std::string::npos);
  EXPECT_EQ(run({"export-dot"}).code, kExitUsage);
  EXPECT_EQ(run({"export-dot", "--gadget", "3", "--path", "0,7"}).code, kExitUsage);
}

TEST_F(CliTest, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(run({"solve"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "-i", file("missing.txt")}).code, kExitUsage);
  const std::string broken = write("broken.txt", "p 3 1\ne 0 7\n");
  CliRun r = run({"solve", "-i", broken});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  const std::string ok = write("ok.txt", "p 2 1\ne 0 1\ns 0\nt 1\n");
  EXPECT_EQ(run({"solve", "-i", ok, "--c", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "-i", ok, "--workers", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "--ell", "1", "--depth", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}
