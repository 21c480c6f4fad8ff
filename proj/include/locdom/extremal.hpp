#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

/// Star with k2 legs of length 2 and k4 legs of length 4 (centre 0, legs
/// numbered outward in order). m = 2*k2 + 4*k4. Throws EmptyFamily.
Graph spider_weld_tree(std::size_t k2, std::size_t k4);

/// K_{1,k} with every edge subdivided twice; m = 3k. Throws TooSmall for k <= 1.
Graph subdivided_star_eltd(std::size_t k);

Graph path_graph(std::size_t n);      // P_n, n >= 1
Graph cycle_graph(std::size_t n);     // C_n, n >= 3
Graph complete_graph(std::size_t n);  // K_n, n >= 1
Graph star_graph(std::size_t k);      // K_{1,k} with centre 0, k >= 1
Graph paw_graph();                    // triangle 0,1,2 plus pendant edge 2-3
Graph diamond_graph();                // K_4 minus the edge 2-3

/// Catalogue lookup: "P5", "C6", "K4", "K1,3" (or "star3"), "paw" (or
/// "K3+"), "K4-e", "diamond". Throws UnknownName or TooSmall.
Graph named_graph(std::string_view name);

struct RootedTree {
  Graph tree;
  Vertex root = 0;
  std::vector<std::optional<Vertex>> parent;  // nullopt for the root
  std::vector<std::size_t> depth;

  std::vector<Vertex> children(Vertex v) const;
  /// D(v): proper descendants.
  VertexSubset descendants(Vertex v) const;
};

/// Throws NotATree.
RootedTree root_tree(const Graph& tree, Vertex root);

/// Builds an edge-locating-total-dominating set of an edge-twin-free tree of
/// diameter at least 4 by peeling subtrees off a longest path: small-diameter
/// trees take every non-pendant edge, larger ones recurse on the tree with
/// the deepest branch removed. Ties go to the smallest vertex id.
/// Throws NotATree, EdgeTwins or DiameterTooSmall.
EdgeSubset tree_eltd_construct(const Graph& tree);

}  // namespace locdom
