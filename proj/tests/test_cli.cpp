#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jr/cli.hpp"
#include "jr/explicit.hpp"
#include "jr/graph_io.hpp"
#include "oracle.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = jr::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("jr_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, BitrevBuildThenVerify) {
  ASSERT_EQ(run({"gen", "--kind", "bitrev", "--n", "16", "-o", path("a"), path("b")}).code, 0);
  ASSERT_EQ(run({"build", "--mode", "explicit", "--class", "two-paths", path("a"), path("b"),
                 "-o", path("j")}).code, 0);
  CliResult v = run({"verify", path("j"), path("a"), path("b")});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "ok\n");
}

TEST_F(Cli, VerifyReportsViolation) {
  jr::save_graph(path("a"), jr::Digraph(3, {{0, 1}, {1, 2}}, jr::Kind::kPath));
  jr::save_join_graph(path("j"), {jr::Digraph(3, {{0, 1}}), 3, {}});
  CliResult v = run({"verify", path("j"), path("a"), path("a")});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("violation 0 2"), std::string::npos);
}

TEST_F(Cli, QueryOnIdenticalChainsListsAll) {
  const int n = 12;
  std::vector<jr::Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
  jr::save_graph(path("c"), jr::Digraph(n, arcs, jr::Kind::kPath));
  CliResult q = run({"query", path("c"), path("c"), "-b", std::to_string(n - 1)});
  EXPECT_EQ(q.code, 0);
  std::string expect;
  for (int i = 0; i < n; ++i) expect += std::to_string(i) + "\n";
  EXPECT_EQ(q.out, expect);
}

TEST_F(Cli, StatsRatioOnTwoPaths) {
  ASSERT_EQ(run({"gen", "--kind", "bitrev", "--n", "1024", "-o", path("a"), path("b")}).code, 0);
  ASSERT_EQ(run({"build", "--class", "two-paths", path("a"), path("b"), "-o", path("j")}).code, 0);
  CliResult s = run({"stats", path("j")});
  ASSERT_EQ(s.code, 0);
  auto pos = s.out.find("ratio_nlogn\t");
  ASSERT_NE(pos, std::string::npos);
  double ratio = std::stod(s.out.substr(pos + 12));
  EXPECT_LE(ratio, 3.0);
  EXPECT_NE(s.out.find("n\t1024\n"), std::string::npos);
}

TEST_F(Cli, AutoDetectedClassesVerify) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"path", "path"}, {"out-tree", "path"}, {"out-tree", "in-tree"},
      {"utree-random", "utree-random"}, {"dag-gnp", "dag-gnp"}, {"sp-st", "path"}};
  int seed = 0;
  for (const auto& [k1, k2] : pairs) {
    ++seed;
    ASSERT_EQ(run({"gen", "--kind", k1, "--n", "30", "--seed", std::to_string(seed), "-o", path("a")}).code, 0);
    ASSERT_EQ(run({"gen", "--kind", k2, "--n", "30", "--seed", std::to_string(seed + 50), "-o", path("b")}).code, 0);
    ASSERT_EQ(run({"build", path("a"), path("b"), "-o", path("j")}).code, 0) << k1 << " " << k2;
    EXPECT_EQ(run({"verify", path("j"), path("a"), path("b")}).code, 0) << k1 << " " << k2;
  }
}

TEST_F(Cli, QueriesMatchOracleAcrossClasses) {
  const std::vector<std::tuple<std::string, std::string, std::string>> cases = {
      {"path", "path", ""},          {"utree-random", "path", ""},
      {"in-tree", "out-tree", ""},   {"dag-gnp", "out-tree", ""},
      {"sp-st", "path", "planar-st"}, {"sp-st", "path", "pathcover"},
      {"out-tree", "in-tree", "hpd-two-trees"}};
  int seed = 100;
  for (const auto& [k1, k2, cls] : cases) {
    ++seed;
    run({"gen", "--kind", k1, "--n", "25", "--seed", std::to_string(seed), "-o", path("a")});
    run({"gen", "--kind", k2, "--n", "25", "--seed", std::to_string(seed + 7), "-o", path("b")});
    auto g1 = jr::load_graph(path("a"));
    auto g2 = jr::load_graph(path("b"));
    auto rel = oracle::join(g1, g2);
    for (int b = 0; b < 25; ++b) {
      std::vector<std::string> args = {"query", path("a"), path("b"), "-b", std::to_string(b)};
      if (!cls.empty()) {
        args.push_back("--class");
        args.push_back(cls);
      }
      CliResult q = run(args);
      ASSERT_EQ(q.code, 0) << q.err;
      std::string expect;
      for (int a = 0; a < 25; ++a) {
        if (rel[a][b]) expect += std::to_string(a) + "\n";
      }
      EXPECT_EQ(q.out, expect) << k1 << " " << k2 << " " << cls << " b=" << b;
    }
  }
}

TEST_F(Cli, CyclicInputsAreCondensed) {
  jr::save_graph(path("a"), jr::Digraph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}));
  jr::save_graph(path("b"), jr::Digraph(4, {{1, 0}, {0, 1}, {3, 2}, {2, 1}}));
  ASSERT_EQ(run({"build", path("a"), path("b"), "-o", path("j")}).code, 0);
  EXPECT_EQ(run({"verify", path("j"), path("a"), path("b")}).code, 0);
  CliResult q = run({"query", path("a"), path("b"), "-b", "1"});
  EXPECT_EQ(q.out, "0\n1\n2\n");
}

TEST_F(Cli, MinimalClass) {
  run({"gen", "--kind", "bitrev", "--n", "16", "-o", path("a"), path("b")});
  ASSERT_EQ(run({"build", "--class", "minimal", path("a"), path("b"), "-o", path("j")}).code, 0);
  EXPECT_EQ(run({"verify", path("j"), path("a"), path("b")}).code, 0);
  EXPECT_GE(jr::load_join_graph(path("j")).graph.m(), 32u);
}

TEST_F(Cli, ErrorsExitWithTwo) {
  run({"gen", "--kind", "sp-st", "--n", "20", "-o", path("s")});
  run({"gen", "--kind", "path", "--n", "20", "-o", path("p")});
  CliResult amb = run({"query", path("s"), path("p"), "-b", "0"});
  EXPECT_EQ(amb.code, 2);
  EXPECT_NE(amb.err.find("--class"), std::string::npos);
  EXPECT_EQ(run({"gen", "--kind", "bitrev", "--n", "12", "-o", path("x")}).code, 2);
  EXPECT_EQ(run({"verify", path("missing"), path("s"), path("p")}).code, 2);
  EXPECT_EQ(run({"query", path("p"), path("p"), "-b", "20"}).code, 2);
  EXPECT_EQ(run({"build", "--class", "two-paths", path("s"), path("p")}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  std::ofstream(path("bad")) << "3 1 path\n0\n";
  EXPECT_EQ(run({"stats", path("bad")}).code, 2);
}

TEST_F(Cli, GenIsDeterministic) {
  run({"gen", "--kind", "dag-gnp", "--n", "40", "--seed", "9", "-o", path("x")});
  run({"gen", "--kind", "dag-gnp", "--n", "40", "--seed", "9", "-o", path("y")});
  EXPECT_EQ(jr::load_graph(path("x")), jr::load_graph(path("y")));
}

TEST_F(Cli, BenchEmitsTable) {
  CliResult b = run({"bench", "--suite", "paths", "--max-n", "512"});
  ASSERT_EQ(b.code, 0);
  std::istringstream lines(b.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 8) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 5);
}

}  // namespace
