#include "locdom/twins.hpp"

#include <algorithm>
#include <numeric>

namespace locdom {
namespace {

std::string edge_text(const Graph& g, EdgeIndex e) {
  return std::to_string(g.edges()[e].u) + "-" + std::to_string(g.edges()[e].v);
}

std::optional<Vertex> shared_end(const Edge& a, const Edge& b) {
  if (a.u == b.u || a.u == b.v) return a.u;
  if (a.v == b.u || a.v == b.v) return a.v;
  return std::nullopt;
}

Vertex other_end(const Edge& e, Vertex v) { return e.u == v ? e.v : e.u; }

}  // namespace

TwinReport twin_report(const Graph& g) {
  TwinReport r;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.open_neighborhood(u) == g.open_neighborhood(v)) r.open_vertex_pairs.emplace_back(u, v);
      if (g.closed_neighborhood(u) == g.closed_neighborhood(v)) r.closed_vertex_pairs.emplace_back(u, v);
    }
  for (EdgeIndex e = 0; e < g.size(); ++e)
    for (EdgeIndex f = e + 1; f < g.size(); ++f) {
      if (g.edge_neighborhood(e) == g.edge_neighborhood(f)) r.open_edge_pairs.emplace_back(e, f);
      if (g.closed_edge_neighborhood(e) == g.closed_edge_neighborhood(f)) r.closed_edge_pairs.emplace_back(e, f);
    }
  return r;
}

bool is_twin_free(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.open_neighborhood(u) == g.open_neighborhood(v) || g.closed_neighborhood(u) == g.closed_neighborhood(v))
        return false;
  return true;
}

bool is_edge_twin_free(const Graph& g) {
  for (EdgeIndex e = 0; e < g.size(); ++e)
    for (EdgeIndex f = e + 1; f < g.size(); ++f)
      if (g.edge_neighborhood(e) == g.edge_neighborhood(f) ||
          g.closed_edge_neighborhood(e) == g.closed_edge_neighborhood(f))
        return false;
  return true;
}

bool has_open_edge_twins(const Graph& g) {
  for (EdgeIndex e = 0; e < g.size(); ++e)
    for (EdgeIndex f = e + 1; f < g.size(); ++f)
      if (g.edge_neighborhood(e) == g.edge_neighborhood(f)) return true;
  return false;
}

std::vector<std::size_t> edge_twin_classes(const Graph& g) {
  std::vector<std::size_t> cls(g.size());
  std::iota(cls.begin(), cls.end(), std::size_t{0});
  for (EdgeIndex f = 0; f < g.size(); ++f)
    for (EdgeIndex e = 0; e < f; ++e)
      if (g.edge_neighborhood(e) == g.edge_neighborhood(f) ||
          g.closed_edge_neighborhood(e) == g.closed_edge_neighborhood(f)) {
        cls[f] = cls[e];
        break;
      }
  return cls;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  if (n > 10) throw Error(ErrorCode::TooLarge, "brute-force isomorphism is limited to 10 vertices");
  std::vector<std::size_t> da(n), db(n);
  for (Vertex v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) ok = da[v] == db[perm[v]];
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = b.adjacent(perm[a.edges()[i].u], perm[a.edges()[i].v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Graph> open_edge_twin_graphs() {
  return {
      Graph::build(4, {{0, 1}, {1, 2}, {2, 3}}),                                  // P4
      Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),                          // C4
      Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}),                          // paw
      Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}),                  // K4 - e
      Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),          // K4
  };
}

std::vector<EdgeTwinViolation> check_observation1(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "edge-twin observations need a connected graph");
  std::vector<EdgeTwinViolation> out;
  const auto twins = twin_report(g);
  const auto& edges = g.edges();

  for (auto [e, f] : twins.open_edge_pairs)
    if (shared_end(edges[e], edges[f]))
      out.push_back({'a', "open edge-twins " + edge_text(g, e) + ", " + edge_text(g, f) + " share an end"});
  for (auto [e, f] : twins.closed_edge_pairs)
    if (!shared_end(edges[e], edges[f]))
      out.push_back({'a', "closed edge-twins " + edge_text(g, e) + ", " + edge_text(g, f) + " share no end"});

  if (!twins.open_edge_pairs.empty()) {
    const auto targets = open_edge_twin_graphs();
    bool matched = std::any_of(targets.begin(), targets.end(), [&](const Graph& t) { return are_isomorphic(g, t); });
    if (!matched) out.push_back({'b', "open edge-twins in a graph outside {P4, C4, paw, K4-e, K4}"});
  }

  for (auto [e, f] : twins.closed_edge_pairs) {
    auto v = shared_end(edges[e], edges[f]);
    if (!v) continue;  // already reported under (a)
    Vertex u = other_end(edges[e], *v);
    Vertex w = other_end(edges[f], *v);
    const auto uw = g.edge_index(u, w);
    (g.edge_neighborhood(e) | g.edge_neighborhood(f)).for_each([&](std::size_t h) {
      if (h == e || h == f || (uw && h == *uw)) return;
      if (edges[h].u != *v && edges[h].v != *v)
        out.push_back({'c', "edge " + edge_text(g, h) + " next to closed edge-twins " + edge_text(g, e) + ", " +
                                edge_text(g, f) + " avoids their shared end"});
    });
    const auto du = g.degree(u);
    const auto dw = g.degree(w);
    if (du != dw || (du != 1 && du != 2))
      out.push_back({'c', "non-shared ends of " + edge_text(g, e) + ", " + edge_text(g, f) + " have degrees " +
                              std::to_string(du) + " and " + std::to_string(dw)});
    if (du == 2 && dw == 2) {
      for (auto [a, b] : twins.closed_edge_pairs) {
        bool is_pair = a == e && b == f;
        if (!is_pair && (a == e || b == e || a == f || b == f)) {
          out.push_back({'f', "closed edge-twins " + edge_text(g, e) + ", " + edge_text(g, f) +
                                  " with degree-2 ends have another closed edge-twin"});
          break;
        }
      }
    }
  }

  std::vector<std::size_t> open_count(g.size(), 0);
  std::vector<bool> has_closed(g.size(), false);
  for (auto [e, f] : twins.open_edge_pairs) {
    ++open_count[e];
    ++open_count[f];
  }
  for (auto [e, f] : twins.closed_edge_pairs) has_closed[e] = has_closed[f] = true;
  for (EdgeIndex e = 0; e < g.size(); ++e) {
    if (open_count[e] > 0 && has_closed[e]) out.push_back({'d', "edge " + edge_text(g, e) + " has both twin kinds"});
    if (open_count[e] > 1) out.push_back({'e', "edge " + edge_text(g, e) + " has several open edge-twins"});
  }
  return out;
}

}  // namespace locdom
