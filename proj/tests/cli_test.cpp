#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "relay/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args`, capturing stdout and stderr.
Outcome Relay(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" RELAY_CLI_PATH "' " + args + " 2>&1";
  Outcome run;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return run;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) run.out += buf.data();
  const int status = ::pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void Spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

long long RangeOf(const fs::path& dds) {
  const auto doc = nlohmann::json::parse(Slurp(dds));
  return doc.at("range").get<long long>();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("relay_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string P(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenerateThenSolveProp1) {
  ASSERT_EQ(Relay("generate prop1 --W 100 --k 10 -o " + P("a.ddi")).code, 0);
  const Outcome g = Relay("solve " + P("a.ddi") + " --alg greedy1 -o " + P("g.dds"));
  ASSERT_EQ(g.code, 0) << g.out;
  EXPECT_EQ(RangeOf(P("g.dds")), 91);
  ASSERT_EQ(Relay("solve " + P("a.ddi") + " --alg exact -o " + P("e.dds")).code, 0);
  EXPECT_LE(RangeOf(P("e.dds")), 11);
  ASSERT_EQ(Relay("solve " + P("a.ddi") + " --alg matching -o " + P("m.dds")).code, 0);
  EXPECT_LE(RangeOf(P("m.dds")), 3 * RangeOf(P("e.dds")));
}

TEST_F(CliTest, RandomGenerationIsDeterministic) {
  ASSERT_EQ(Relay("generate random --n 12 --k 4 --seed 7 -o " + P("x.ddi")).code, 0);
  ASSERT_EQ(Relay("generate random --n 12 --k 4 --seed 7 -o " + P("y.ddi")).code, 0);
  EXPECT_EQ(Slurp(P("x.ddi")), Slurp(P("y.ddi")));
}

TEST_F(CliTest, GenerateRejectsBadParameters) {
  const Outcome r = Relay("generate prop1 --W 10 --k 3 -o " + P("bad.ddi"));
  EXPECT_EQ(r.code, 4) << r.out;
  EXPECT_FALSE(fs::exists(P("bad.ddi")));
}

TEST_F(CliTest, GreedyBetaOneEqualsGreedy1OnUnitInstance) {
  ASSERT_EQ(Relay("generate prop1 --W 16 --k 4 -o " + P("u.ddi")).code, 0);
  // Give it enough agents for a beta = 1 grid.
  auto doc = nlohmann::ordered_json::parse(Slurp(P("u.ddi")));
  doc["agents"] = std::vector<int>(16, 0);
  Spit(P("u.ddi"), doc.dump());
  ASSERT_EQ(Relay("solve " + P("u.ddi") + " --alg greedy1 -o " + P("a.dds")).code, 0);
  ASSERT_EQ(Relay("solve " + P("u.ddi") + " --alg greedy-beta --beta 1 -o " + P("b.dds")).code, 0);
  auto a = nlohmann::json::parse(Slurp(P("a.dds")));
  auto b = nlohmann::json::parse(Slurp(P("b.dds")));
  EXPECT_EQ(a["legs"], b["legs"]);
  EXPECT_EQ(a["range"], b["range"]);
}

TEST_F(CliTest, ValidateAcceptsSolverOutputAndRejectsGaps) {
  ASSERT_EQ(Relay("generate random --n 8 --k 3 --seed 1 -o " + P("r.ddi")).code, 0);
  ASSERT_EQ(Relay("solve " + P("r.ddi") + " --alg exact -o " + P("r.dds")).code, 0);
  const Outcome ok = Relay("validate " + P("r.ddi") + " " + P("r.dds"));
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("OK"), std::string::npos);

  Spit(P("gap.ddi"), R"({"vertices": 4, "edges": [[0,1,1],[1,2,1],[2,3,1]], "path": [0,1,2,3], "agents": [0, 2]})");
  Spit(P("gap.dds"), R"({"solver": "hand", "range": 2, "legs": [[0,0,1],[1,2,3]]})");
  const Outcome bad = Relay("validate " + P("gap.ddi") + " " + P("gap.dds"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("coverage gap"), std::string::npos) << bad.out;
}

TEST_F(CliTest, ValidateReplaysBudgets) {
  Spit(P("b.ddi"), R"({"vertices": 6, "edges": [[0,1,1],[1,2,1],[2,3,1],[3,4,1],[2,5,1]], "path": [0,1,2,3,4], "agents": [0, 5], "budgets": [2, 3]})");
  Spit(P("b.dds"), R"({"solver": "hand", "range": 3, "legs": [[0,0,2],[1,2,4]]})");
  const Outcome r = Relay("validate " + P("b.ddi") + " " + P("b.dds"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("4 steps"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("[0, 0]"), std::string::npos) << r.out;
}

TEST_F(CliTest, ExitCodes) {
  Spit(P("broken.ddi"), "{\"vertices\": 2,");
  EXPECT_EQ(Relay("solve " + P("broken.ddi")).code, 4);
  Spit(P("island.ddi"), R"({"vertices": 4, "edges": [[0,1,1],[1,2,1]], "path": [0,1,2], "agents": [3]})");
  EXPECT_EQ(Relay("solve " + P("island.ddi") + " --alg greedy1").code, 2);
  ASSERT_EQ(Relay("generate random --n 8 --k 5 --seed 2 -o " + P("k5.ddi")).code, 0);
  EXPECT_EQ(Relay("solve " + P("k5.ddi") + " --alg exact", "RELAY_ORACLE_MAX_K=4").code, 3);
  EXPECT_EQ(Relay("solve " + P("k5.ddi") + " --alg exact", "RELAY_ORACLE_MAX_K=5").code, 0);
  EXPECT_EQ(Relay("solve " + P("k5.ddi") + " --alg nonsense").code, 4);
}

TEST_F(CliTest, RelaxedSolveValidatesAgainstTheRelaxation) {
  Spit(P("w.ddi"), R"({"vertices": 3, "edges": [[0,1,3],[1,2,3]], "path": [0,1,2], "agents": [0, 2]})");
  ASSERT_EQ(Relay("solve " + P("w.ddi") + " --alg exact -o " + P("v.dds")).code, 0);
  EXPECT_EQ(RangeOf(P("v.dds")), 6);  // vertex hand-overs only
  ASSERT_EQ(Relay("solve " + P("w.ddi") + " --alg exact --relax -o " + P("w.dds")).code, 0);
  EXPECT_EQ(RangeOf(P("w.dds")), 4);  // hand-over inside the first edge
  EXPECT_EQ(Relay("validate " + P("w.ddi") + " " + P("w.dds") + " --relax").code, 0);
}

TEST_F(CliTest, BenchProp1Sweep) {
  const Outcome r = Relay("bench --family prop1 --W 25 --W 100 --W 400 -o " + P("p1.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  std::istringstream csv(Slurp(P("p1.csv")));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "instance,W,k,greedy1,greedy_wk,matching,exact,ratio_g1,ratio_gwk,ratio_m");
  double last = 0;
  int rows = 0;
  while (std::getline(csv, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string x; std::getline(ss, x, ',');) f.push_back(x);
    ASSERT_EQ(f.size(), 10u) << line;
    const double g1 = std::stod(f[7]);
    EXPECT_GT(g1, last);
    last = g1;
    // Ratios agree with the ranges they summarize.
    EXPECT_NEAR(g1, std::stod(f[3]) / std::stod(f[6]), 0.0005);
    EXPECT_LE(std::stod(f[9]), 3.0);
    EXPECT_EQ(f[7].size() - f[7].find('.'), 4u);
    ++rows;
  }
  EXPECT_EQ(rows, 3);
}

TEST_F(CliTest, BenchRecordsPerRowFailures) {
  Spit(P("a.ddi"), R"({"vertices": 3, "edges": [[0,1,1],[1,2,1]], "path": [0,1,2], "agents": [0]})");
  Spit(P("b.ddi"), "not json");
  const Outcome r = Relay("bench " + dir_.string() + " -o " + P("out.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string csv = Slurp(P("out.csv"));
  EXPECT_NE(csv.find("a.ddi,2,1,2,2,2,2,1.000,1.000,1.000"), std::string::npos) << csv;
  EXPECT_NE(csv.find("b.ddi,,,error"), std::string::npos) << csv;
}

}  // namespace
