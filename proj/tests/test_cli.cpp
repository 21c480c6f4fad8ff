#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "locdom/cli.hpp"

using namespace locdom;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = run_cli(args, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SolveFromStdin) {
  auto r = cli({"solve", "--param", "eltd"}, "EhEG\n");
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "4 0-1 0-5 1-2 2-3\n");
}

TEST(Cli, SolveInlineNamedAndFile) {
  EXPECT_EQ(cli({"solve", "--param", "weld", "--named", "K4"}).out.substr(0, 2), "2 ");
  EXPECT_EQ(cli({"solve", "--param", "dom", "--g6", "Bg"}).out, "1 1\n");
  EXPECT_EQ(cli({"solve", "--param", "ld", "--named", "K5"}).out, "4 0 1 2 3\n");

  const std::string path = ::testing::TempDir() + "locdom_cli_p5.txt";
  std::ofstream(path) << "5 4\n0 1\n1 2\n2 3\n3 4\n";
  auto r = cli({"solve", "--param", "edge_loc_total_dom", "--in", path});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "2 1-2 2-3\n");
  std::remove(path.c_str());
}

TEST(Cli, SolveErrors) {
  auto infeasible = cli({"solve", "--param", "eltd", "--named", "P2"});
  EXPECT_EQ(infeasible.status, kExitPrecondition);
  EXPECT_NE(infeasible.err.find("isolated edges"), std::string::npos);
  EXPECT_EQ(cli({"solve", "--param", "nope", "--named", "P3"}).status, kExitUsage);
  EXPECT_EQ(cli({"solve", "--named", "P3"}).status, kExitUsage);
  EXPECT_EQ(cli({"solve", "--param", "dom", "--g6", "Bw", "--named", "P3"}).status, kExitUsage);
  EXPECT_EQ(cli({"solve", "--param", "dom", "--g6", "B!"}).status, kExitPrecondition);
  EXPECT_EQ(cli({}).status, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).status, kExitUsage);
}

TEST(Cli, Twins) {
  auto r = cli({"twins", "--named", "C4"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out,
            "{\"graph6\":\"Cl\",\"twin_free\":false,\"edge_twin_free\":false,"
            "\"open_vertex_pairs\":[[0,2],[1,3]],\"closed_vertex_pairs\":[],"
            "\"open_edge_pairs\":[[\"0-1\",\"2-3\"],[\"0-3\",\"1-2\"]],\"closed_edge_pairs\":[]}\n");
}

TEST(Cli, LineGraphAndGen) {
  EXPECT_EQ(cli({"linegraph", "--named", "K1,3"}).out, "Bw\n");
  EXPECT_EQ(cli({"gen", "--family", "named", "C6"}).out, "EhEG\n");
  EXPECT_EQ(cli({"gen", "--family", "spider", "1", "0"}).out, "Bg\n");
  EXPECT_EQ(cli({"gen", "--family", "substar", "2"}).status, kExitOk);
  EXPECT_EQ(cli({"gen", "--family", "substar", "1"}).status, kExitPrecondition);
  EXPECT_EQ(cli({"gen", "--family", "spider", "1"}).status, kExitUsage);
  EXPECT_EQ(cli({"gen", "--family", "moebius"}).status, kExitUsage);
}

TEST(Cli, Encode) {
  EXPECT_EQ(cli({"encode", "--from", "g6", "--to", "edgelist"}, "Bg\n").out, "3 2\n0 1\n1 2\n");
  EXPECT_EQ(cli({"encode", "--from", "edgelist", "--to", "g6"}, "4 4\n0 1\n1 2\n2 3\n0 3\n").out, "Cl\n");
  EXPECT_EQ(cli({"encode", "--from", "edgelist", "--to", "g6"}, "3 2\n0 1\n").status, kExitPrecondition);
  EXPECT_EQ(cli({"encode", "--from", "dot", "--to", "g6"}, "Bg\n").status, kExitUsage);
}

TEST(Cli, Verify) {
  auto r = cli({"verify", "--theorem", "weld_half", "--max-n", "4"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("\"summary\""), std::string::npos);
  EXPECT_NE(r.out.find("\"violations\":0"), std::string::npos);
  // 1 + 1 + 4 + 38 records plus the summary line.
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 45);

  auto serial = cli({"verify", "--theorem", "weld_half", "--max-n", "4", "--serial"});
  EXPECT_EQ(serial.out, r.out);

  auto quiet = cli({"verify", "--theorem", "eld_half", "--max-n", "5", "--summary-only", "--shard", "1/3"});
  EXPECT_EQ(quiet.status, kExitOk);
  EXPECT_EQ(std::count(quiet.out.begin(), quiet.out.end(), '\n'), 1);

  EXPECT_EQ(cli({"verify", "--theorem", "weld_half", "--max-n", "7"}).status, kExitUsage);
  EXPECT_EQ(cli({"verify", "--theorem", "weld_half"}).status, kExitUsage);
  EXPECT_EQ(cli({"verify", "--theorem", "nonsense", "--max-n", "3"}).status, kExitUsage);
  EXPECT_EQ(cli({"verify", "--theorem", "weld_half", "--max-n", "3", "--shard", "3/3"}).status, kExitUsage);
}

TEST(Cli, VerifyFileAndViolationStatus) {
  const std::string path = ::testing::TempDir() + "locdom_cli_graphs.g6";
  std::ofstream(path) << ">>graph6<<EhEG\nC~\nA_\n";
  auto r = cli({"verify", "--theorem", "weld_half", "--in", path});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("\"checked\":2"), std::string::npos);
  auto s = cli({"verify", "--theorem", "size6_eld3", "--in", path, "--summary-only"});
  EXPECT_EQ(s.status, kExitOk);

  std::ofstream(path) << "Bw\nCl\n";
  auto obs = cli({"verify", "--theorem", "obs1", "--in", path});
  EXPECT_EQ(obs.status, kExitViolation);
  EXPECT_NE(obs.out.find("\"violating\":[\"Bw\"]"), std::string::npos);
  std::remove(path.c_str());
}
