#include "locdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace locdom {
namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), kUnreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    g.open_neighborhood(x).for_each([&](std::size_t y) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    });
  }
  return dist;
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  if (n > kMaxVertices)
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceeds " + std::to_string(kMaxVertices));
  if (pairs.size() > kMaxEdges)
    throw Error(ErrorCode::TooLarge, std::to_string(pairs.size()) + " edges exceeds " + std::to_string(kMaxEdges));

  Graph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorCode::VertexOutOfRange, pair_text(a, b));
    if (a == b) throw Error(ErrorCode::SelfLoop, pair_text(a, b));
    g.edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end())
    throw Error(ErrorCode::DuplicateEdge, pair_text(dup->u, dup->v));

  g.adjacency_.assign(n, VertexSubset{});
  g.incidence_.assign(n, EdgeSubset{});
  for (EdgeIndex i = 0; i < g.edges_.size(); ++i) {
    auto [u, v] = g.edges_[i];
    g.adjacency_[u].insert(v);
    g.adjacency_[v].insert(u);
    g.incidence_[u].insert(i);
    g.incidence_[v].insert(i);
  }
  g.edge_adjacency_.resize(g.edges_.size());
  for (EdgeIndex i = 0; i < g.edges_.size(); ++i) {
    auto [u, v] = g.edges_[i];
    EdgeSubset nb = g.incidence_[u] | g.incidence_[v];
    nb.erase(i);
    g.edge_adjacency_[i] = nb;
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
}

void Graph::check_edge(EdgeIndex e) const {
  if (e >= edges_.size()) throw Error(ErrorCode::EdgeOutOfRange, "edge " + std::to_string(e));
}

void Graph::check_subset(const VertexSubset& s) const {
  if (s.bound() > n_) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(s.bound() - 1));
}

void Graph::check_subset(const EdgeSubset& s) const {
  if (s.bound() > edges_.size()) throw Error(ErrorCode::EdgeOutOfRange, "edge " + std::to_string(s.bound() - 1));
}

const Edge& Graph::edge(EdgeIndex e) const {
  check_edge(e);
  return edges_[e];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[u].contains(v);
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return adjacency_[v].size();
}

std::optional<EdgeIndex> Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

VertexSubset Graph::open_neighborhood(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

VertexSubset Graph::closed_neighborhood(Vertex v) const {
  auto s = open_neighborhood(v);
  s.insert(v);
  return s;
}

EdgeSubset Graph::edge_neighborhood(EdgeIndex e) const {
  check_edge(e);
  return edge_adjacency_[e];
}

EdgeSubset Graph::closed_edge_neighborhood(EdgeIndex e) const {
  auto s = edge_neighborhood(e);
  s.insert(e);
  return s;
}

EdgeSubset Graph::incident_edges(Vertex v) const {
  check_vertex(v);
  return incidence_[v];
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSubset seen{0};
  VertexSubset frontier{0};
  while (!frontier.empty()) {
    VertexSubset next;
    frontier.for_each([&](std::size_t x) { next |= g.open_neighborhood(x); });
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen.size() == g.order();
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

bool has_isolated_edge(const Graph& g) {
  for (const auto& [u, v] : g.edges())
    if (g.degree(u) == 1 && g.degree(v) == 1) return true;
  return false;
}

std::size_t diameter(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "diameter of a disconnected graph");
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto dist = bfs_distances(g, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

Structure structural_queries(const Graph& g) {
  Structure s;
  const std::size_t n = g.order();
  s.degrees.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    s.degrees[v] = g.degree(v);
    if (s.degrees[v] == 0) s.has_isolated_vertex = true;
  }
  for (EdgeIndex e = 0; e < g.size(); ++e) {
    auto [u, v] = g.edges()[e];
    if (s.degrees[u] == 1 && s.degrees[v] == 1) s.isolated_edges.push_back(e);
  }

  std::vector<bool> assigned(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (assigned[root]) continue;
    auto dist = bfs_distances(g, root);
    std::vector<Vertex> comp;
    for (Vertex v = 0; v < n; ++v)
      if (dist[v] != kUnreached) {
        comp.push_back(v);
        assigned[v] = true;
      }
    std::size_t diam = 0;
    for (Vertex v : comp) {
      auto dv = bfs_distances(g, v);
      for (Vertex w : comp) diam = std::max(diam, dv[w]);
    }
    s.components.push_back(std::move(comp));
    s.diameters.push_back(diam);
  }
  s.connected = s.components.size() <= 1;

  // Shortest cycle: for every root, a non-tree edge closes a cycle of length
  // dist[a] + dist[b] + 1; the minimum over all roots is exact.
  std::size_t girth = kUnreached;
  for (Vertex root = 0; root < n; ++root) {
    std::vector<std::size_t> dist(n, kUnreached);
    std::vector<Vertex> parent(n, n);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      g.open_neighborhood(x).for_each([&](std::size_t y) {
        if (dist[y] == kUnreached) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          girth = std::min(girth, dist[x] + dist[y] + 1);
        }
      });
    }
  }
  if (girth != kUnreached) s.girth = girth;
  s.is_forest = !s.girth.has_value();
  s.is_tree = n >= 1 && s.connected && s.is_forest;
  return s;
}

EdgeDeletion delete_edges(const Graph& g, const EdgeSubset& removed) {
  g.check_subset(removed);
  EdgeDeletion out;
  out.translation.resize(g.size());
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (EdgeIndex e = 0; e < g.size(); ++e) {
    if (removed.contains(e)) continue;
    // Surviving edges keep their relative order, so the new index is the count so far.
    out.translation[e] = kept.size();
    kept.emplace_back(g.edges()[e].u, g.edges()[e].v);
  }
  out.graph = Graph::build(g.order(), kept);
  return out;
}

}  // namespace locdom
