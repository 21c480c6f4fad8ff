#include <gtest/gtest.h>

#include "locdom/codec.hpp"
#include "locdom/extremal.hpp"
#include "locdom/verify.hpp"

using namespace locdom;

namespace {

std::string run(Theorem t, std::size_t max_n, bool connected, bool parallel, Summary* summary = nullptr) {
  std::string text;
  HarnessOptions options;
  options.parallel = parallel;
  options.batch_size = 257;  // several batches even for small orders
  auto s = verify_enumerated(t, {1, max_n, connected, false, {}}, options,
                             [&](const BoundReport& r) { text += format_record(r); });
  if (summary) *summary = s;
  return text;
}

}  // namespace

TEST(Evaluate, WeldRecordForC6) {
  auto r = evaluate(cycle_graph(6), Theorem::weld_half);
  EXPECT_EQ(r.graph6, "EhEG");
  EXPECT_EQ(r.m, 6u);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].parameter, "weld");
  EXPECT_EQ(r.checks[0].value, 3u);
  EXPECT_EQ(r.checks[0].bound, Rational(3));
  EXPECT_TRUE(r.checks[0].holds);
  EXPECT_FALSE(r.violated());
}

TEST(Evaluate, SkipReasons) {
  EXPECT_EQ(evaluate(complete_graph(2), Theorem::weld_half).skipped_reason, SkipReason::isolated_edge);
  EXPECT_EQ(evaluate(path_graph(4), Theorem::eld_half).skipped_reason, SkipReason::not_edge_twin_free);
  EXPECT_EQ(evaluate(Graph::build(3, {{0, 1}}), Theorem::ore_half).skipped_reason, SkipReason::isolated_vertex);
  EXPECT_EQ(evaluate(Graph::build(4, {{0, 1}, {2, 3}}), Theorem::obs1).skipped_reason, SkipReason::disconnected);
  EXPECT_EQ(evaluate(path_graph(4), Theorem::size6_eld3).skipped_reason, SkipReason::size_mismatch);
  EXPECT_EQ(evaluate(complete_graph(2), Theorem::cockayne_two_thirds).skipped_reason, SkipReason::isolated_edge);
  EXPECT_EQ(evaluate(cycle_graph(4), Theorem::cor_ld_line).skipped_reason, SkipReason::not_edge_twin_free);
}

TEST(Evaluate, Size6DisconnectedIsReportedNotAsserted) {
  auto p7 = evaluate(path_graph(7), Theorem::size6_eld3);
  EXPECT_TRUE(p7.asserted());
  ASSERT_EQ(p7.checks.size(), 1u);
  EXPECT_EQ(p7.checks[0].value, 3u);

  // P7 plus an isolated vertex: same edges, but the graph is disconnected.
  auto g = Graph::build(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  auto r = evaluate(g, Theorem::size6_eld3);
  EXPECT_EQ(r.skipped_reason, SkipReason::disconnected);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].value, 3u);
  EXPECT_FALSE(r.violated());

  // P5 + P3 is not edge-twin-free (the P3 edges are closed edge-twins).
  auto split = Graph::build(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}});
  EXPECT_EQ(evaluate(split, Theorem::size6_eld3).skipped_reason, SkipReason::not_edge_twin_free);
}

TEST(Evaluate, LineBoundCarriesBothRoutes) {
  auto r = evaluate(cycle_graph(6), Theorem::cor_ltd_line);
  ASSERT_EQ(r.checks.size(), 3u);
  EXPECT_EQ(r.checks[0].parameter, "ltd_line");
  EXPECT_EQ(r.checks[0].value, 4u);
  EXPECT_EQ(r.checks[1].parameter, "eltd");
  EXPECT_EQ(r.checks[1].value, 4u);
  EXPECT_EQ(r.checks[2].parameter, "line_agreement");
  EXPECT_TRUE(r.checks[2].holds);
}

TEST(Harness, SerialAndParallelKernelsAgree) {
  for (auto t : kAllTheorems) {
    Summary a, b;
    auto serial = run(t, 5, false, false, &a);
    auto parallel = run(t, 5, false, true, &b);
    ASSERT_EQ(serial, parallel) << to_string(t);
    EXPECT_EQ(a.to_json(), b.to_json());
    // The triangle breaks the closed edge-twin uniqueness item.
    EXPECT_EQ(a.violations, t == Theorem::obs1 ? 1u : 0u) << to_string(t);
  }
}

TEST(Harness, DeterministicStreams) {
  EXPECT_EQ(run(Theorem::weld_half, 5, true, true), run(Theorem::weld_half, 5, true, true));
}

TEST(Harness, SummaryCounts) {
  Summary s;
  run(Theorem::weld_half, 3, true, true, &s);
  // Connected graphs of order 1..3: 1 + 1 + 4; only K2 has an isolated edge.
  EXPECT_EQ(s.graphs, 6u);
  EXPECT_EQ(s.checked, 5u);
  EXPECT_EQ(s.skipped.at(SkipReason::isolated_edge), 1u);
  EXPECT_EQ(s.violations, 0u);
  EXPECT_EQ(s.to_json(),
            "{\"summary\":{\"theorem\":\"weld_half\",\"graphs\":6,\"checked\":5,"
            "\"skipped\":{\"isolated_edge\":1},\"violations\":0,\"violating\":[]}}");
}

TEST(Harness, ShardedRunsMergeToTheWhole) {
  HarnessOptions options;
  Summary whole = verify_enumerated(Theorem::eltd_two_thirds, {1, 5, true, false, {}}, options, {});
  Summary merged;
  merged.theorem = Theorem::eltd_two_thirds;
  for (std::size_t i = 0; i < 3; ++i)
    merged.merge(verify_enumerated(Theorem::eltd_two_thirds, {1, 5, true, false, {i, 3}}, options, {}));
  EXPECT_EQ(merged.graphs, whole.graphs);
  EXPECT_EQ(merged.checked, whole.checked);
  EXPECT_EQ(merged.skipped, whole.skipped);
}

TEST(Harness, ViolationsAreRecorded) {
  Summary s;
  BoundReport bad;
  bad.graph6 = "Bw";
  bad.checks.push_back(make_check("weld", 9, Rational(1)));
  s.add(bad);
  EXPECT_EQ(s.violations, 1u);
  EXPECT_EQ(s.violating_graph6, std::vector<std::string>{"Bw"});
}

TEST(Harness, ExplicitGraphList) {
  std::vector<Graph> graphs{cycle_graph(6), complete_graph(2), spider_weld_tree(2, 1)};
  std::vector<BoundReport> seen;
  auto s = verify_graphs(Theorem::weld_half, graphs, {}, [&](const BoundReport& r) { seen.push_back(r); });
  ASSERT_EQ(seen.size(), 3u);
  EXPECT_EQ(s.checked, 2u);
  EXPECT_EQ(seen[2].checks[0].value, 4u);
  EXPECT_EQ(seen[2].checks[0].bound, Rational(4));
}

TEST(Theorems, Names) {
  for (auto t : kAllTheorems) EXPECT_EQ(parse_theorem(to_string(t)), t);
  EXPECT_FALSE(parse_theorem("conjecture2").has_value());
}

TEST(Theorems, ClassicalBoundsOnOrderSeven) {
  HarnessOptions options;
  for (auto t : {Theorem::ore_half, Theorem::cockayne_two_thirds}) {
    auto s = verify_enumerated(t, {7, 7, true, false, {}}, options, {});
    EXPECT_EQ(s.graphs, 1866256u);
    EXPECT_EQ(s.checked, s.graphs);
    EXPECT_EQ(s.violations, 0u) << to_string(t);
  }
}
