#pragma once

#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

/// L(G) together with the edge -> vertex correspondence. Line vertices reuse
/// the canonical edge indices of the base graph, so the map is the identity.
struct LineGraphMap {
  Graph base;
  Graph line;
  std::vector<Vertex> edge_to_vertex;
};

/// Throws TooLarge when the base graph has more edges than a Graph may have vertices.
LineGraphMap line_graph(const Graph& g);

VertexSubset transfer_edge_set(const LineGraphMap& map, const EdgeSubset& edges);

}  // namespace locdom
