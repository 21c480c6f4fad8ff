#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locdom/enumerate.hpp"
#include "locdom/report.hpp"

namespace locdom {

enum class Theorem {
  weld_half,            // γ'_wL <= m/2, no isolated edge
  eld_half,             // γ'_L <= m/2, edge-twin-free, no isolated edge
  eltd_two_thirds,      // γ'_{t,L} <= 2m/3, edge-twin-free, no isolated edge
  cor_ld_line,          // γ_L(L(G)) <= |V(L(G))|/2 on twin-free line graphs
  cor_ltd_line,         // γ_t^L(L(G)) <= 2|V(L(G))|/3 on twin-free line graphs
  obs1,                 // structural facts about edge-twins
  ore_half,             // γ <= n/2, no isolated vertex
  cockayne_two_thirds,  // γ_t <= 2n/3, every component of order >= 3
  size6_eld3,           // γ'_L = 3 on connected edge-twin-free graphs with m = 6
};

inline constexpr Theorem kAllTheorems[] = {
    Theorem::weld_half, Theorem::eld_half, Theorem::eltd_two_thirds, Theorem::cor_ld_line,         Theorem::cor_ltd_line,
    Theorem::obs1,      Theorem::ore_half, Theorem::cockayne_two_thirds, Theorem::size6_eld3,
};

std::string_view to_string(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);

/// One record for one graph. Precondition failures yield a skipped record.
BoundReport evaluate(const Graph& g, Theorem theorem);

/// Reference kernel: evaluates the batch in order on the calling thread.
std::vector<BoundReport> evaluate_batch_serial(std::span<const Graph> graphs, Theorem theorem);
/// OpenMP kernel: same output, graphs evaluated concurrently. `threads` of 0
/// keeps the OpenMP default.
std::vector<BoundReport> evaluate_batch_parallel(std::span<const Graph> graphs, Theorem theorem,
                                                 int threads = 0);

struct Summary {
  Theorem theorem = Theorem::weld_half;
  std::size_t graphs = 0;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::map<SkipReason, std::size_t> skipped;
  std::vector<std::string> violating_graph6;

  void add(const BoundReport& r);
  void merge(const Summary& other);
  /// Single JSON line.
  std::string to_json() const;
};

struct HarnessOptions {
  bool parallel = true;
  int threads = 0;
  std::size_t batch_size = 4096;
};

using RecordSink = std::function<void(const BoundReport&)>;

/// Orders min_n..max_n, each enumerated as an EnumerationSpec.
struct EnumerationRange {
  std::size_t min_n = 1;
  std::size_t max_n = 1;
  bool connected_only = true;
  bool dedup_isomorphic = false;
  Shard shard{};
};

/// Streams one record per enumerated graph in (order, mask) sequence.
/// Memory stays bounded by one batch.
Summary verify_enumerated(Theorem theorem, const EnumerationRange& range, const HarnessOptions& options,
                          const RecordSink& sink);

/// Same, for an explicit graph list (for example read from a graph6 file).
Summary verify_graphs(Theorem theorem, std::span<const Graph> graphs, const HarnessOptions& options,
                      const RecordSink& sink);

}  // namespace locdom
