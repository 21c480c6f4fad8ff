#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

struct Shard {
  std::size_t index = 0;
  std::size_t total = 1;
};

inline constexpr std::size_t kMaxEnumerationOrder = 8;

/// All labeled graphs of order n, one per subset of the C(n,2) vertex pairs.
/// Pair (i, j) in lexicographic pair order is bit k of the subset mask.
struct EnumerationSpec {
  std::size_t n = 0;
  bool connected_only = false;
  bool dedup_isomorphic = false;
  Shard shard{};
};

/// Throws SpecTooLarge (n > 8) or BadSyntax (shard index >= total).
void validate(const EnumerationSpec& spec);

std::size_t pair_count(std::size_t n);
std::uint64_t labeled_graph_count(std::size_t n);

/// Graph for a given pair mask.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Shard owning a mask: the low ceil(log2(total)) pair bits, reduced mod total.
std::size_t shard_of(std::uint64_t mask, std::size_t total);

/// Canonical isomorphism code (n <= 8): the minimum pair mask over all
/// relabelings that list vertices in non-decreasing degree order.
std::uint64_t canonical_code(const Graph& g);

/// Pull-style stream over an EnumerationSpec, in increasing mask order.
class GraphStream {
 public:
  explicit GraphStream(EnumerationSpec spec);

  std::optional<Graph> next();

  /// Masks visited so far (before the connectivity and dedup filters).
  std::uint64_t labeled_seen() const { return labeled_seen_; }

 private:
  EnumerationSpec spec_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_ = 0;
  std::uint64_t labeled_seen_ = 0;
  std::vector<std::uint64_t> seen_codes_;
};

/// Non-isomorphic free trees of order n (n >= 1), grown leaf by leaf and
/// deduplicated by a centre-rooted canonical string.
std::vector<Graph> enumerate_trees(std::size_t n);

}  // namespace locdom
