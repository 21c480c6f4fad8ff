#include "locdom/linegraph.hpp"

#include <string>

namespace locdom {

LineGraphMap line_graph(const Graph& g) {
  if (g.size() > kMaxVertices)
    throw Error(ErrorCode::TooLarge, std::to_string(g.size()) + " edges do not fit as line-graph vertices");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (EdgeIndex e = 0; e < g.size(); ++e)
    g.edge_neighborhood(e).for_each([&](std::size_t f) {
      if (f > e) pairs.emplace_back(e, f);
    });
  LineGraphMap map{g, Graph::build(g.size(), pairs), {}};
  map.edge_to_vertex.resize(g.size());
  for (EdgeIndex e = 0; e < g.size(); ++e) map.edge_to_vertex[e] = e;
  return map;
}

VertexSubset transfer_edge_set(const LineGraphMap& map, const EdgeSubset& edges) {
  map.base.check_subset(edges);
  VertexSubset out;
  edges.for_each([&](std::size_t e) { out.insert(map.edge_to_vertex[e]); });
  return out;
}

}  // namespace locdom
