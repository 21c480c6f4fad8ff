#include "locdom/extremal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <limits>
#include <string>

#include "locdom/twins.hpp"

namespace locdom {
namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::TooSmall, what);
}

/// Appends a path of `length` edges hanging off `anchor`, using fresh vertex ids.
void add_leg(Pairs& pairs, std::size_t& next, Vertex anchor, std::size_t length) {
  Vertex prev = anchor;
  for (std::size_t i = 0; i < length; ++i) {
    pairs.emplace_back(prev, next);
    prev = next++;
  }
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph spider_weld_tree(std::size_t k2, std::size_t k4) {
  if (k2 + k4 == 0) throw Error(ErrorCode::EmptyFamily, "spider needs at least one leg");
  Pairs pairs;
  std::size_t next = 1;
  for (std::size_t i = 0; i < k2; ++i) add_leg(pairs, next, 0, 2);
  for (std::size_t i = 0; i < k4; ++i) add_leg(pairs, next, 0, 4);
  return Graph::build(next, pairs);
}

Graph subdivided_star_eltd(std::size_t k) {
  require(k >= 2, "subdivided star needs k >= 2");
  Pairs pairs;
  std::size_t next = 1;
  for (std::size_t i = 0; i < k; ++i) add_leg(pairs, next, 0, 3);
  return Graph::build(next, pairs);
}

Graph path_graph(std::size_t n) {
  require(n >= 1, "P_n needs n >= 1");
  Pairs pairs;
  for (Vertex v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  return Graph::build(n, pairs);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "C_n needs n >= 3");
  Pairs pairs;
  for (Vertex v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
  return Graph::build(n, pairs);
}

Graph complete_graph(std::size_t n) {
  require(n >= 1, "K_n needs n >= 1");
  Pairs pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return Graph::build(n, pairs);
}

Graph star_graph(std::size_t k) {
  require(k >= 1, "K_{1,k} needs k >= 1");
  Pairs pairs;
  for (Vertex v = 1; v <= k; ++v) pairs.emplace_back(0, v);
  return Graph::build(k + 1, pairs);
}

Graph paw_graph() { return Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph diamond_graph() { return Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph named_graph(std::string_view name) {
  if (name == "paw" || name == "K3+") return paw_graph();
  if (name == "diamond" || name == "K4-e") return diamond_graph();
  auto unknown = [&] { return Error(ErrorCode::UnknownName, "no catalogue graph named '" + std::string(name) + "'"); };
  if (name.starts_with("star")) {
    if (auto k = parse_count(name.substr(4))) return star_graph(*k);
    throw unknown();
  }
  if (name.starts_with("K1,")) {
    if (auto k = parse_count(name.substr(3))) return star_graph(*k);
    throw unknown();
  }
  if (name.size() < 2) throw unknown();
  auto size = parse_count(name.substr(1));
  if (!size) throw unknown();
  switch (name[0]) {
    case 'P': return path_graph(*size);
    case 'C': return cycle_graph(*size);
    case 'K': return complete_graph(*size);
    default: throw unknown();
  }
}

std::vector<Vertex> RootedTree::children(Vertex v) const {
  std::vector<Vertex> out;
  tree.open_neighborhood(v).for_each([&](std::size_t w) {
    if (parent[w] && *parent[w] == v) out.push_back(w);
  });
  return out;
}

VertexSubset RootedTree::descendants(Vertex v) const {
  VertexSubset out;
  std::vector<Vertex> stack = children(v);
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    out.insert(x);
    for (Vertex c : children(x)) stack.push_back(c);
  }
  return out;
}

RootedTree root_tree(const Graph& tree, Vertex root) {
  tree.check_vertex(root);
  if (!structural_queries(tree).is_tree) throw Error(ErrorCode::NotATree, "graph is not a tree");
  RootedTree t{tree, root, std::vector<std::optional<Vertex>>(tree.order()), std::vector<std::size_t>(tree.order(), 0)};
  std::vector<bool> seen(tree.order(), false);
  std::deque<Vertex> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    tree.open_neighborhood(x).for_each([&](std::size_t y) {
      if (seen[y]) return;
      seen[y] = true;
      t.parent[y] = x;
      t.depth[y] = t.depth[x] + 1;
      queue.push_back(y);
    });
  }
  return t;
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

/// Tree induced by an active vertex set inside the original graph; edge
/// indices stay those of the original graph.
class Subtree {
 public:
  Subtree(const Graph& g, VertexSubset active) : g_(g), active_(active) {}

  VertexSubset neighbors(Vertex v) const { return g_.open_neighborhood(v) & active_; }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::vector<std::size_t> distances(Vertex source, std::vector<Vertex>* parent = nullptr) const {
    std::vector<std::size_t> dist(g_.order(), kUnreached);
    if (parent) parent->assign(g_.order(), g_.order());
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      neighbors(x).for_each([&](std::size_t y) {
        if (dist[y] != kUnreached) return;
        dist[y] = dist[x] + 1;
        if (parent) (*parent)[y] = x;
        queue.push_back(y);
      });
    }
    return dist;
  }

  std::size_t eccentricity(Vertex v) const {
    std::size_t best = 0;
    auto dist = distances(v);
    active_.for_each([&](std::size_t w) { best = std::max(best, dist[w]); });
    return best;
  }

  EdgeSubset edges_within(const VertexSubset& vertices) const {
    EdgeSubset out;
    for (EdgeIndex e = 0; e < g_.size(); ++e)
      if (vertices.contains(g_.edges()[e].u) && vertices.contains(g_.edges()[e].v)) out.insert(e);
    return out;
  }

  /// Edges inside `vertices` whose ends both have degree >= 2 in this subtree.
  EdgeSubset non_pendant_edges(const VertexSubset& vertices) const {
    EdgeSubset out;
    edges_within(vertices).for_each([&](std::size_t e) {
      if (degree(g_.edges()[e].u) >= 2 && degree(g_.edges()[e].v) >= 2) out.insert(e);
    });
    return out;
  }

  const Graph& graph() const { return g_; }
  const VertexSubset& active() const { return active_; }

 private:
  const Graph& g_;
  VertexSubset active_;
};

EdgeSubset construct(const Subtree& t) {
  const Graph& g = t.graph();
  std::size_t diam = 0;
  t.active().for_each([&](std::size_t v) { diam = std::max(diam, t.eccentricity(v)); });
  if (diam < 4) throw Error(ErrorCode::DiameterTooSmall, "subtree of diameter " + std::to_string(diam));
  if (diam <= 6) return t.non_pendant_edges(t.active());

  // Root at the smallest-id end of a longest path, then take the smallest-id
  // deepest leaf u and its ancestors v, w, x, y.
  Vertex root = g.order();
  t.active().for_each([&](std::size_t v) {
    if (root == g.order() && t.eccentricity(v) == diam) root = v;
  });
  std::vector<Vertex> parent;
  auto depth = t.distances(root, &parent);
  Vertex u = g.order();
  t.active().for_each([&](std::size_t v) {
    if (u == g.order() && depth[v] == diam) u = v;
  });
  const Vertex v = parent[u];
  const Vertex w = parent[v];
  const Vertex x = parent[w];
  const Vertex y = parent[x];

  VertexSubset below_x;  // D(x)
  t.active().for_each([&](std::size_t z) {
    for (Vertex a = z; a != root; a = parent[a])
      if (parent[a] == x) {
        below_x.insert(z);
        break;
      }
  });
  VertexSubset subtree_x = below_x;  // D[x]
  subtree_x.insert(x);

  bool y_has_leaf = false;
  t.neighbors(y).for_each([&](std::size_t z) { y_has_leaf = y_has_leaf || t.degree(z) == 1; });

  const VertexSubset removed = y_has_leaf ? subtree_x : below_x;
  EdgeSubset d = construct(Subtree(g, t.active() - removed));
  d.insert(*g.edge_index(x, w));
  d |= t.non_pendant_edges(subtree_x);
  return d;
}

}  // namespace

EdgeSubset tree_eltd_construct(const Graph& tree) {
  const auto s = structural_queries(tree);
  if (!s.is_tree) throw Error(ErrorCode::NotATree, "graph is not a tree");
  if (!is_edge_twin_free(tree)) throw Error(ErrorCode::EdgeTwins, "tree has edge-twins");
  if (s.diameters.front() < 4)
    throw Error(ErrorCode::DiameterTooSmall, "tree of diameter " + std::to_string(s.diameters.front()));
  return construct(Subtree(tree, tree.all_vertices()));
}

}  // namespace locdom
