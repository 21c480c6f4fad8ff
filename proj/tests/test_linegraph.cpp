#include <gtest/gtest.h>

#include <random>

#include "locdom/enumerate.hpp"
#include "locdom/extremal.hpp"
#include "locdom/linegraph.hpp"
#include "locdom/solvers.hpp"
#include "locdom/twins.hpp"

using namespace locdom;

TEST(LineGraph, Examples) {
  EXPECT_TRUE(are_isomorphic(line_graph(path_graph(4)).line, path_graph(3)));
  EXPECT_TRUE(are_isomorphic(line_graph(cycle_graph(5)).line, cycle_graph(5)));
  EXPECT_TRUE(are_isomorphic(line_graph(star_graph(3)).line, complete_graph(3)));
  auto empty = line_graph(Graph::build(3, {}));
  EXPECT_EQ(empty.line.order(), 0u);
  EXPECT_THROW(line_graph(complete_graph(12)), Error);  // 66 edges
}

TEST(LineGraph, InvariantsOnAllGraphsUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
      auto g = graph_from_mask(n, mask);
      auto map = line_graph(g);
      ASSERT_EQ(map.line.order(), g.size());
      for (EdgeIndex e = 0; e < g.size(); ++e) {
        ASSERT_EQ(map.edge_to_vertex[e], e);
        auto [u, v] = g.edges()[e];
        ASSERT_EQ(map.line.degree(e), g.degree(u) + g.degree(v) - 2);
        for (EdgeIndex f = 0; f < g.size(); ++f) {
          const auto& a = g.edges()[e];
          const auto& b = g.edges()[f];
          bool share = e != f && (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v);
          ASSERT_EQ(e != f && map.line.adjacent(e, f), share);
        }
      }
    }
}

TEST(TransferEdgeSet, Basics) {
  auto g = cycle_graph(5);
  auto map = line_graph(g);
  EXPECT_TRUE(transfer_edge_set(map, EdgeSubset{}).empty());
  EXPECT_EQ(transfer_edge_set(map, g.all_edges()), map.line.all_vertices());
  EXPECT_THROW(transfer_edge_set(map, EdgeSubset{5}), Error);
}

TEST(TransferEdgeSet, PredicatesCorrespondOnEverySubset) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 4;
    auto g = graph_from_mask(n, rng() & (labeled_graph_count(n) - 1));
    if (g.size() > 10) continue;
    auto map = line_graph(g);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.size()); ++bits) {
      EdgeSubset d;
      for (EdgeIndex e = 0; e < g.size(); ++e)
        if ((bits >> e) & 1U) d.insert(e);
      auto image = transfer_edge_set(map, d);
      ASSERT_EQ(is_edge_dominating(g, d), is_dominating(map.line, image));
      ASSERT_EQ(is_edge_total_dominating(g, d), is_total_dominating(map.line, image));
      ASSERT_EQ(is_edge_locating(g, d), is_locating(map.line, image));
    }
  }
}

TEST(TransferEdgeSet, WeldWitnessFeasibilityInLineGraph) {
  // A WELD-set of G is an LD-set of L(G) exactly when the located pairs it
  // skips (edge-twins) do not occur outside the set.
  for (std::size_t n = 3; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
      auto g = graph_from_mask(n, mask);
      if (has_isolated_edge(g) || g.size() == 0) continue;
      auto weld = std::get<EdgeSubset>(solve_min(g, Parameter::weak_edge_loc_dom).witness);
      auto map = line_graph(g);
      auto image = transfer_edge_set(map, weld);
      ASSERT_EQ(is_feasible(map.line, Parameter::loc_dom, image), is_feasible(g, Parameter::edge_loc_dom, weld));
      if (is_edge_twin_free(g)) ASSERT_TRUE(is_feasible(map.line, Parameter::loc_dom, image));
    }
}

TEST(LineGraph, EdgeTwinsAreLineTwins) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
      auto g = graph_from_mask(n, mask);
      if (has_isolated_vertex(g)) continue;
      auto line = line_graph(g).line;
      ASSERT_EQ(is_edge_twin_free(g), is_twin_free(line));
      auto ge = twin_report(g);
      auto lv = twin_report(line);
      ASSERT_EQ(ge.open_edge_pairs.size(), lv.open_vertex_pairs.size());
      ASSERT_EQ(ge.closed_edge_pairs.size(), lv.closed_vertex_pairs.size());
      for (std::size_t i = 0; i < ge.open_edge_pairs.size(); ++i)
        ASSERT_EQ(ge.open_edge_pairs[i], lv.open_vertex_pairs[i]);
      for (std::size_t i = 0; i < ge.closed_edge_pairs.size(); ++i)
        ASSERT_EQ(ge.closed_edge_pairs[i], lv.closed_vertex_pairs[i]);
    }
}
