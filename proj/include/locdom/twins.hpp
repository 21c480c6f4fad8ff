#pragma once

#include <string>
#include <utility>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

struct TwinReport {
  std::vector<std::pair<Vertex, Vertex>> open_vertex_pairs;      // N(u) = N(v)
  std::vector<std::pair<Vertex, Vertex>> closed_vertex_pairs;    // N[u] = N[v]
  std::vector<std::pair<EdgeIndex, EdgeIndex>> open_edge_pairs;  // N(e) = N(f)
  std::vector<std::pair<EdgeIndex, EdgeIndex>> closed_edge_pairs;  // N[e] = N[f]
};

/// All twin pairs, each listed once as (smaller, larger) in lexicographic order.
TwinReport twin_report(const Graph& g);

bool is_twin_free(const Graph& g);
bool is_edge_twin_free(const Graph& g);
bool has_open_edge_twins(const Graph& g);

/// Edge-twin classes: class id per edge, equal ids exactly for edge-twin pairs.
/// Open and closed edge-twinship are each an equivalence relation and no edge
/// has both kinds, so their union is an equivalence relation too.
std::vector<std::size_t> edge_twin_classes(const Graph& g);

struct EdgeTwinViolation {
  char item;  // 'a'..'f'
  std::string detail;
};

/// Evaluates the structural facts about edge-twins in a connected graph:
///  (a) open edge-twins share no end, closed edge-twins share one;
///  (b) open edge-twins only occur in P4, C4, the paw, K4-e and K4;
///  (c) for closed edge-twins uv, vw every edge adjacent to either is uw or
///      incident with v, and d(u) = d(w) is 1 or 2;
///  (d) no edge has both an open and a closed edge-twin;
///  (e) an edge has at most one open edge-twin;
///  (f) when the non-shared ends have degree 2, the twin is unique.
/// Returns the violated items (expected empty). Throws NotConnected.
std::vector<EdgeTwinViolation> check_observation1(const Graph& g);

/// The five connected graphs that admit open edge-twins.
std::vector<Graph> open_edge_twin_graphs();

/// Brute-force isomorphism test over all vertex permutations (small n only).
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace locdom
