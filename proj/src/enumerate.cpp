#include "locdom/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

namespace locdom {

std::size_t pair_count(std::size_t n) { return n * (n == 0 ? 0 : n - 1) / 2; }

std::uint64_t labeled_graph_count(std::size_t n) { return std::uint64_t{1} << pair_count(n); }

void validate(const EnumerationSpec& spec) {
  if (spec.n > kMaxEnumerationOrder)
    throw Error(ErrorCode::SpecTooLarge, "enumeration is limited to n <= " + std::to_string(kMaxEnumerationOrder));
  if (spec.shard.total == 0 || spec.shard.index >= spec.shard.total)
    throw Error(ErrorCode::BadSyntax, "shard index must be below the shard count");
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t k = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1U) pairs.emplace_back(i, j);
  return Graph::build(n, pairs);
}

std::size_t shard_of(std::uint64_t mask, std::size_t total) {
  if (total <= 1) return 0;
  const auto bits = static_cast<unsigned>(std::bit_width(total - 1));
  return static_cast<std::size_t>((mask & ((std::uint64_t{1} << bits) - 1)) % total);
}

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxEnumerationOrder) throw Error(ErrorCode::TooLarge, "canonical code needs n <= 8");

  // Pair index table for (i, j), i < j.
  std::size_t index[kMaxEnumerationOrder][kMaxEnumerationOrder] = {};
  for (std::size_t i = 0, k = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) index[i][j] = index[j][i] = k;

  // Candidate labelings: vertices sorted by degree, permuted only inside
  // blocks of equal degree.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t s = 0; s < n;) {
    std::size_t e = s;
    while (e < n && g.degree(order[e]) == g.degree(order[s])) ++e;
    blocks.emplace_back(s, e);
    s = e;
  }

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::size_t> label(n);
  // Odometer over the per-block permutations.
  while (true) {
    for (std::size_t pos = 0; pos < n; ++pos) label[order[pos]] = pos;
    std::uint64_t code = 0;
    for (const auto& [u, v] : g.edges()) code |= std::uint64_t{1} << index[label[u]][label[v]];
    best = std::min(best, code);

    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;  // wrapped blocks are back in sorted order
    }
    if (b == blocks.size()) break;
  }
  return best | (static_cast<std::uint64_t>(n) << 56);
}

GraphStream::GraphStream(EnumerationSpec spec) : spec_(spec) {
  validate(spec_);
  end_ = labeled_graph_count(spec_.n);
}

std::optional<Graph> GraphStream::next() {
  while (mask_ < end_) {
    const std::uint64_t mask = mask_++;
    ++labeled_seen_;
    if (shard_of(mask, spec_.shard.total) != spec_.shard.index) continue;
    Graph g = graph_from_mask(spec_.n, mask);
    if (spec_.connected_only && !is_connected(g)) continue;
    if (spec_.dedup_isomorphic) {
      const auto code = canonical_code(g);
      auto it = std::lower_bound(seen_codes_.begin(), seen_codes_.end(), code);
      if (it != seen_codes_.end() && *it == code) continue;
      seen_codes_.insert(it, code);
    }
    return g;
  }
  return std::nullopt;
}

namespace {

/// AHU encoding of the tree rooted at `root`, children sorted.
std::string rooted_code(const std::vector<std::vector<Vertex>>& adj, Vertex root, Vertex from) {
  std::vector<std::string> parts;
  for (Vertex c : adj[root])
    if (c != from) parts.push_back(rooted_code(adj, c, root));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (auto& p : parts) out += p;
  out += ")";
  return out;
}

std::string tree_code(const Graph& t) {
  const std::size_t n = t.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : t.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // Centres: strip leaves layer by layer.
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    auto code = rooted_code(adj, c, n);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Graph> enumerate_trees(std::size_t n) {
  if (n == 0) return {};
  if (n > kMaxVertices) throw Error(ErrorCode::TooLarge, "tree order exceeds the vertex cap");
  std::vector<Graph> trees{Graph::build(1, {})};
  for (std::size_t order = 2; order <= n; ++order) {
    std::set<std::string> seen;
    std::vector<Graph> grown;
    for (const auto& t : trees) {
      for (Vertex v = 0; v < t.order(); ++v) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (const auto& [a, b] : t.edges()) pairs.emplace_back(a, b);
        pairs.emplace_back(v, order - 1);
        Graph g = Graph::build(order, pairs);
        if (seen.insert(tree_code(g)).second) grown.push_back(std::move(g));
      }
    }
    trees = std::move(grown);
  }
  return trees;
}

}  // namespace locdom
