#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "feynman/cli.hpp"
#include "support/corpus.hpp"

namespace feynman {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, VerifyBouquet) {
  const auto r = run({"verify", "--builtin", "bouquet:3", "--max-n", "12"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("feynman-identity\tpass"), std::string::npos);
  EXPECT_NE(r.out.find("c-bound\tfail (advisory)"), std::string::npos);
}

TEST(Cli, CountsWithOracle) {
  const auto r = run({"counts", "--builtin", "cycle:4", "--max-n", "8", "--oracle"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("N\tTrT\tTrS\tK+\tK-\ttheta+\ttheta-\ttheta\tOmega\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n4\t8\t-8\t8\t0\t2\t0\t2\t-2\n"), std::string::npos);
}

TEST(Cli, NegativeMaxNIsUsageError) {
  EXPECT_EQ(run({"zeta", "--which", "kw", "--max-n", "-1", "--builtin", "cycle:3"}).code, 2);
  EXPECT_EQ(run({"zeta", "--max-n", "0", "--builtin", "cycle:3"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"info", "--builtin", "petersen"}).code, 2);
  EXPECT_EQ(run({"info", "--builtin", "bouquet:0"}).code, 2);
  EXPECT_EQ(run({"zeta", "--which", "riemann", "--builtin", "k4"}).code, 2);
  EXPECT_EQ(run({"counts", "--format", "xml", "--builtin", "k4"}).code, 2);
  EXPECT_EQ(run({"info", "--input", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"info"}, "{not json").code, 2);
  EXPECT_EQ(run({"info", "--builtin", "k4", "--input", "x.json"}).code, 2);
  EXPECT_EQ(run({"generate"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, GenerateRoundTripsThroughVerify) {
  for (const char* family : {"bouquet:1", "bouquet:2", "bouquet:3", "theta_chain:2", "theta_chain:3", "cycle:3",
                             "cycle:4", "k4"}) {
    const auto g = run({"generate", family});
    ASSERT_EQ(g.code, 0) << family << g.err;
    const auto v = run({"verify", "--max-n", "10"}, g.out);
    EXPECT_EQ(v.code, 0) << family << v.out << v.err;
  }
}

TEST(Cli, JsonIsStableAndReparses) {
  for (const char* cmd : {"info", "matrices", "counts", "euler", "zeta", "verify", "lie-dims"}) {
    const auto a = run({cmd, "--builtin", "k4", "--format", "json"});
    const auto b = run({cmd, "--builtin", "k4", "--format", "json"});
    ASSERT_EQ(a.code, 0) << cmd << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
    const auto doc = Json::parse(a.out);
    EXPECT_EQ(doc.dump(2) + "\n", a.out) << cmd;
  }
  const auto counts = Json::parse(run({"counts", "--builtin", "k4", "--format", "json"}).out);
  EXPECT_TRUE(counts["rows"][0]["TrT"].is_string());
}

TEST(Cli, ZetaOutput) {
  const auto r = run({"zeta", "--which", "ihara", "--max-n", "3", "--builtin", "cycle:3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# 1 + 2 z^3 [O(z^4)]\n", 0), 0u);
  EXPECT_NE(r.out.find("3\t2\n"), std::string::npos);
}

TEST(Cli, LieDimsMarksMatches) {
  const auto r = run({"lie-dims", "--builtin", "cycle:3", "--max-n", "6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("3\t2\t-2\t0\t2\t0\t2\t0\t2\t✓\t-2\n"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("✗"), std::string::npos);
}

TEST(Cli, WittTable) {
  const auto r = run({"witt", "--rank", "2", "--max-n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "N\tM(N;2)\n1\t2\n2\t1\n3\t2\n");
}

TEST(Cli, EulerAndMatrices) {
  EXPECT_EQ(run({"euler", "--builtin", "cycle:3"}).out, "N\ta(N)\n0\t1\n1\t0\n2\t0\n3\t1\n");
  const auto m = run({"matrices", "--builtin", "cycle:3"});
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out.rfind("# T\n", 0), 0u);
  EXPECT_NE(m.out.find("# S\n"), std::string::npos);
}

TEST(Cli, InputFileAndStdin) {
  const std::string path = testing::data_path("c4_tripled_edge.json");
  const auto file = run({"verify", "--input", path});
  EXPECT_EQ(file.code, 0) << file.err;
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const auto stdin_run = run({"verify", "--input", "-"}, text.str());
  EXPECT_EQ(stdin_run.code, 0);
}

TEST(Cli, CrossingDrawingIsRejectedUnlessSkipped) {
  const std::string bowtie =
      R"({"vertices":[{"id":0,"x":0,"y":0},{"id":1,"x":1,"y":0},{"id":2,"x":1,"y":1},{"id":3,"x":0,"y":1}],
          "edges":[{"id":0,"from":0,"to":1},{"id":1,"from":1,"to":2},{"id":2,"from":2,"to":3},
                   {"id":3,"from":3,"to":0},{"id":4,"from":0,"to":2},{"id":5,"from":1,"to":3}]})";
  const auto r = run({"info"}, bowtie);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("crossing"), std::string::npos);
  EXPECT_EQ(run({"info", "--no-validate"}, bowtie).code, 0);
}

TEST(Cli, ToleranceFromEnvironment) {
  ::setenv("FW_TOLERANCE", "banana", 1);
  EXPECT_EQ(run({"counts", "--builtin", "k4"}).code, 2);
  ::setenv("FW_TOLERANCE", "1e-8", 1);
  EXPECT_EQ(run({"counts", "--builtin", "k4"}).code, 0);
  ::unsetenv("FW_TOLERANCE");
  EXPECT_EQ(run({"counts", "--builtin", "k4", "--tolerance", "0"}).code, 2);
}

}  // namespace
}  // namespace feynman
