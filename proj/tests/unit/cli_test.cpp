/* cli_test.cpp -- command dispatch, exit codes and argument parsing.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "endgraph/automatic.hpp"

namespace endgraph::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Last non-comment line of the output.
std::string answer(const std::string &out) {
  std::istringstream in(out);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') last = line;
  return last;
}

TEST(ParseEdges, Forms) {
  EXPECT_TRUE(parse_edges("").empty());
  EXPECT_TRUE(parse_edges("{}").empty());
  EXPECT_EQ(parse_edges("(1,0)"), (EdgeSet{make_edge(0, 1)}));
  EXPECT_EQ(parse_edges("(0,1),(5,6,1)"), (EdgeSet{make_edge(0, 1), make_edge(5, 6, 1)}));
  EXPECT_EQ(parse_edges(" ( -3 , -2 ) "), (EdgeSet{make_edge(-3, -2)}));
  EXPECT_THROW(parse_edges("(0,1"), std::invalid_argument);
  EXPECT_THROW(parse_edges("0,1"), std::invalid_argument);
}

TEST(ParseVertices, Forms) {
  EXPECT_EQ(parse_vertices("0,-1,2"), (std::vector<VertexId>{0, -1, 2}));
  EXPECT_THROW(parse_vertices("0,x"), std::invalid_argument);
}

TEST(Cli, DecideCompOnSticks) {
  auto r = call({"decide-comp", "--graph", "lines-with-sticks:halt@3", "--edges", "(0,1)", "--ends",
                 "2", "--witness", "(5,6)"});
  EXPECT_EQ(r.code, kExitDefinite) << r.err;
  EXPECT_EQ(answer(r.out), "1");
  EXPECT_NE(r.out.find("# graph: lines-with-sticks:halt@3"), std::string::npos);
}

TEST(Cli, EulerCheckTwoEndedLine) {
  auto r = call({"euler-check", "--graph", "delta2:changes@2,5,9", "--mode", "two-way", "--ends", "2",
                 "--witness", "auto", "--parity-radius", "12", "--loc-radius", "12"});
  EXPECT_EQ(r.code, kExitDefinite) << r.err;
  EXPECT_NE(r.out.find("Holds"), std::string::npos);
}

TEST(Cli, AutomaticEvalOnGridFile) {
  const std::string path = ::testing::TempDir() + "grid.ap";
  {
    std::ofstream f(path);
    f << automatic::to_text(automatic::grid_presentation());
  }
  auto r = call({"automatic-eval", "--presentation", path, "--formula",
                 "(forall u (exists-even v (adj u v)))"});
  EXPECT_EQ(r.code, kExitDefinite) << r.err;
  EXPECT_EQ(answer(r.out), "true");
}

TEST(Cli, AutomaticEulerPreset) {
  auto r = call({"automatic-euler", "--preset", "nline", "--which", "one-way"});
  EXPECT_EQ(r.code, kExitDefinite) << r.err;
  EXPECT_EQ(answer(r.out), "one-way: true");
}

TEST(Cli, UnknownExitCode) {
  auto r = call({"sep-semidecide", "--graph", "zline", "--edges", "(0,1)", "--max-radius", "8"});
  EXPECT_EQ(r.code, kExitUnknown) << r.out << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(call({"decide-comp", "--graph", "zline"}).code, kExitUsage);
  EXPECT_EQ(call({"ball", "--graph", "no-such-graph", "--radius", "2"}).code, kExitUsage);
  EXPECT_EQ(call({"decide-comp", "--graph", "zline", "--edges", "(0,2)", "--ends", "2", "--witness",
                  "(0,1)"})
                .code,
            kExitUsage);
}

TEST(Cli, BallAndDot) {
  auto r = call({"ball", "--graph", "nline", "--radius", "2"});
  EXPECT_EQ(r.code, kExitDefinite) << r.err;
  auto d = call({"dot-export", "--graph", "zline", "--radius", "2"});
  EXPECT_EQ(d.code, kExitDefinite) << d.err;
  EXPECT_NE(d.out.find("graph"), std::string::npos);
}

TEST(Cli, GreedyPathOnTheLine) {
  auto r = call({"greedy-path", "--graph", "zline", "--start", "0", "--length", "5", "--ends", "2",
                 "--witness", "(0,1)"});
  EXPECT_EQ(r.code, kExitDefinite) << r.err;
  EXPECT_NE(r.out.find("0,-1,-2,-3,-4,-5"), std::string::npos) << r.out;
}

TEST(Cli, GadgetList) {
  auto r = call({"gadget-list"});
  EXPECT_EQ(r.code, kExitDefinite);
  EXPECT_NE(r.out.find("lines-with-sticks"), std::string::npos);
}

}  // namespace
}  // namespace endgraph::cli
