#include <gtest/gtest.h>

#include <random>

#include "locdom/enumerate.hpp"
#include "locdom/extremal.hpp"
#include "locdom/solvers.hpp"
#include "locdom/twins.hpp"

using namespace locdom;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::BadSyntax;
}

// Uniform random labeled tree from a Prüfer sequence.
Graph random_tree(std::mt19937_64& rng, std::size_t n) {
  if (n == 1) return Graph::build(1, {});
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = rng() % n;
  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (auto c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    pairs.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) rest.push_back(v);
  pairs.emplace_back(rest[0], rest[1]);
  return Graph::build(n, pairs);
}

}  // namespace

TEST(Spider, Shapes) {
  EXPECT_EQ(spider_weld_tree(1, 0), path_graph(3));
  auto s30 = spider_weld_tree(3, 0);
  EXPECT_EQ(s30.size(), 6u);
  EXPECT_EQ(solve_value(s30, Parameter::weak_edge_loc_dom), 3u);
  auto s12 = spider_weld_tree(1, 2);
  EXPECT_EQ(s12.size(), 10u);
  EXPECT_EQ(solve_value(s12, Parameter::weak_edge_loc_dom), 5u);
  EXPECT_TRUE(structural_queries(s12).is_tree);
  EXPECT_EQ(code_of([] { spider_weld_tree(0, 0); }), ErrorCode::EmptyFamily);
}

TEST(Spider, TightForSmallFamilies) {
  for (std::size_t k2 = 0; k2 <= 4; ++k2)
    for (std::size_t k4 = 0; k2 + k4 <= 4; ++k4) {
      if (k2 + k4 == 0) continue;
      auto g = spider_weld_tree(k2, k4);
      EXPECT_EQ(g.size() % 2, 0u);
      EXPECT_FALSE(has_isolated_edge(g));
      EXPECT_EQ(2 * solve_value(g, Parameter::weak_edge_loc_dom), g.size()) << k2 << "," << k4;
    }
}

TEST(SubdividedStar, Shapes) {
  EXPECT_EQ(subdivided_star_eltd(2), Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}}));
  EXPECT_TRUE(are_isomorphic(subdivided_star_eltd(2), path_graph(7)));
  EXPECT_EQ(code_of([] { subdivided_star_eltd(1); }), ErrorCode::TooSmall);
  for (std::size_t k = 2; k <= 5; ++k) {
    auto g = subdivided_star_eltd(k);
    EXPECT_EQ(g.size(), 3 * k);
    EXPECT_TRUE(is_edge_twin_free(g));
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(solve_value(g, Parameter::edge_loc_total_dom), 2 * k);
  }
}

TEST(NamedGraph, Catalogue) {
  EXPECT_EQ(named_graph("C6"), Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  EXPECT_EQ(named_graph("paw"), Graph::build(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
  EXPECT_EQ(named_graph("K4-e"), Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  EXPECT_EQ(named_graph("diamond"), named_graph("K4-e"));
  EXPECT_EQ(named_graph("K1,3"), star_graph(3));
  EXPECT_EQ(named_graph("star4"), star_graph(4));
  EXPECT_EQ(named_graph("P1"), Graph::build(1, {}));
  EXPECT_EQ(named_graph("K5").size(), 10u);
  EXPECT_EQ(code_of([] { named_graph("C2"); }), ErrorCode::TooSmall);
  EXPECT_EQ(code_of([] { named_graph("Q3"); }), ErrorCode::UnknownName);
  EXPECT_EQ(code_of([] { named_graph("Cx"); }), ErrorCode::UnknownName);
}

TEST(RootedTree, ParentsAndDescendants) {
  auto t = root_tree(spider_weld_tree(1, 1), 0);  // legs 0-1-2 and 0-3-4-5-6
  EXPECT_FALSE(t.parent[0].has_value());
  EXPECT_EQ(t.parent[4], 3u);
  EXPECT_EQ(t.depth[6], 4u);
  EXPECT_EQ(t.children(0), (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(t.descendants(3), (VertexSubset{4, 5, 6}));
  EXPECT_EQ(code_of([] { root_tree(cycle_graph(4), 0); }), ErrorCode::NotATree);
}

TEST(TreeConstruct, SmallDiameterBaseCase) {
  auto p5 = path_graph(5);
  EXPECT_EQ(tree_eltd_construct(p5), (EdgeSubset{*p5.edge_index(1, 2), *p5.edge_index(2, 3)}));

  auto star3 = subdivided_star_eltd(3);
  auto d = tree_eltd_construct(star3);
  EXPECT_EQ(d.size(), 6u);
  EXPECT_TRUE(is_edge_total_dominating(star3, d));
  EXPECT_TRUE(is_edge_locating(star3, d));
}

TEST(TreeConstruct, Errors) {
  EXPECT_EQ(code_of([] { tree_eltd_construct(cycle_graph(5)); }), ErrorCode::NotATree);
  EXPECT_EQ(code_of([] { tree_eltd_construct(path_graph(4)); }), ErrorCode::EdgeTwins);
  EXPECT_EQ(code_of([] { tree_eltd_construct(star_graph(3)); }), ErrorCode::EdgeTwins);
  EXPECT_EQ(code_of([] { tree_eltd_construct(path_graph(2)); }), ErrorCode::DiameterTooSmall);
}

TEST(TreeConstruct, RecursesOnLongPaths) {
  for (std::size_t n = 5; n <= 20; ++n) {
    auto p = path_graph(n);
    auto d = tree_eltd_construct(p);
    EXPECT_TRUE(is_edge_total_dominating(p, d)) << n;
    EXPECT_TRUE(is_edge_locating(p, d)) << n;
    EXPECT_LE(3 * d.size(), 2 * p.size()) << n;
  }
}

TEST(TreeConstruct, RandomEdgeTwinFreeTrees) {
  std::mt19937_64 rng(1234);
  int tested = 0;
  while (tested < 300) {
    auto t = random_tree(rng, 5 + rng() % 10);
    if (!is_edge_twin_free(t)) continue;
    auto d = tree_eltd_construct(t);
    ASSERT_TRUE(is_edge_total_dominating(t, d));
    ASSERT_TRUE(is_edge_locating(t, d));
    ASSERT_LE(3 * d.size(), 2 * t.size());
    if (t.size() <= 11) ASSERT_GE(d.size(), solve_value(t, Parameter::edge_loc_total_dom));
    ++tested;
  }
}
