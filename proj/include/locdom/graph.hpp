#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "locdom/error.hpp"
#include "locdom/index_set.hpp"

namespace locdom {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;

inline constexpr std::size_t kMaxVertices = VertexSubset::kCapacity;  // 64
inline constexpr std::size_t kMaxEdges = EdgeSubset::kCapacity;       // 128

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with canonical edge indexing: edges are stored as
/// (u, v) with u < v, sorted lexicographically, and the position in that list
/// is the edge index used by every other module. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Normalizes each pair to u < v and sorts. Throws SelfLoop, DuplicateEdge,
  /// VertexOutOfRange or TooLarge.
  static Graph build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph build(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return build(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const;

  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::optional<EdgeIndex> edge_index(Vertex u, Vertex v) const;

  VertexSubset open_neighborhood(Vertex v) const;
  VertexSubset closed_neighborhood(Vertex v) const;
  /// Edges sharing an endpoint with e, excluding e.
  EdgeSubset edge_neighborhood(EdgeIndex e) const;
  EdgeSubset closed_edge_neighborhood(EdgeIndex e) const;
  /// Edges incident with v.
  EdgeSubset incident_edges(Vertex v) const;

  VertexSubset all_vertices() const { return VertexSubset::first_n(n_); }
  EdgeSubset all_edges() const { return EdgeSubset::first_n(edges_.size()); }

  void check_vertex(Vertex v) const;
  void check_edge(EdgeIndex e) const;
  void check_subset(const VertexSubset& s) const;
  void check_subset(const EdgeSubset& s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSubset> adjacency_;
  std::vector<EdgeSubset> edge_adjacency_;
  std::vector<EdgeSubset> incidence_;
};

struct Structure {
  std::vector<std::size_t> degrees;
  /// Vertex partition, each component sorted, components ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components;
  bool connected = false;
  bool has_isolated_vertex = false;
  /// Edges whose endpoints both have degree 1.
  std::vector<EdgeIndex> isolated_edges;
  std::optional<std::size_t> girth;  // absent for forests
  /// Diameter of each component, in the order of `components`.
  std::vector<std::size_t> diameters;
  bool is_forest = false;
  bool is_tree = false;
};

Structure structural_queries(const Graph& g);

/// Eccentricity-based diameter of a connected graph; throws NotConnected.
std::size_t diameter(const Graph& g);

bool is_connected(const Graph& g);
bool has_isolated_edge(const Graph& g);
bool has_isolated_vertex(const Graph& g);

struct EdgeDeletion {
  Graph graph;
  /// For each old edge index, its index in `graph`, or nullopt if deleted.
  std::vector<std::optional<EdgeIndex>> translation;
};

EdgeDeletion delete_edges(const Graph& g, const EdgeSubset& removed);

}  // namespace locdom
