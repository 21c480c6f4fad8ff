#include "locdom/solvers.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "locdom/twins.hpp"

namespace locdom {

std::string_view short_name(Parameter p) {
  switch (p) {
    case Parameter::dom: return "dom";
    case Parameter::total_dom: return "tdom";
    case Parameter::loc_dom: return "ld";
    case Parameter::loc_total_dom: return "ltd";
    case Parameter::edge_loc_dom: return "eld";
    case Parameter::edge_loc_total_dom: return "eltd";
    case Parameter::weak_edge_loc_dom: return "weld";
  }
  return "?";
}

std::string_view long_name(Parameter p) {
  switch (p) {
    case Parameter::dom: return "dom";
    case Parameter::total_dom: return "total_dom";
    case Parameter::loc_dom: return "loc_dom";
    case Parameter::loc_total_dom: return "loc_total_dom";
    case Parameter::edge_loc_dom: return "edge_loc_dom";
    case Parameter::edge_loc_total_dom: return "edge_loc_total_dom";
    case Parameter::weak_edge_loc_dom: return "weak_edge_loc_dom";
  }
  return "?";
}

std::optional<Parameter> parse_parameter(std::string_view name) {
  for (auto p : kAllParameters)
    if (name == short_name(p) || name == long_name(p)) return p;
  return std::nullopt;
}

bool is_edge_parameter(Parameter p) {
  return p == Parameter::edge_loc_dom || p == Parameter::edge_loc_total_dom || p == Parameter::weak_edge_loc_dom;
}

bool is_dominating(const Graph& g, const VertexSubset& d) {
  g.check_subset(d);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!g.closed_neighborhood(v).intersects(d)) return false;
  return true;
}

bool is_total_dominating(const Graph& g, const VertexSubset& d) {
  g.check_subset(d);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!g.open_neighborhood(v).intersects(d)) return false;
  return true;
}

bool is_locating(const Graph& g, const VertexSubset& d) {
  g.check_subset(d);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (d.contains(u)) continue;
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (d.contains(v)) continue;
      if ((g.open_neighborhood(u) & d) == (g.open_neighborhood(v) & d)) return false;
    }
  }
  return true;
}

bool is_edge_dominating(const Graph& g, const EdgeSubset& d) {
  g.check_subset(d);
  for (EdgeIndex e = 0; e < g.size(); ++e)
    if (!d.contains(e) && !g.edge_neighborhood(e).intersects(d)) return false;
  return true;
}

bool is_edge_total_dominating(const Graph& g, const EdgeSubset& d) {
  g.check_subset(d);
  for (EdgeIndex e = 0; e < g.size(); ++e)
    if (!g.edge_neighborhood(e).intersects(d)) return false;
  return true;
}

namespace {

bool edge_locating_impl(const Graph& g, const EdgeSubset& d, bool weak) {
  g.check_subset(d);
  const auto twins = weak ? twin_report(g) : TwinReport{};
  auto exempt = [&](EdgeIndex e, EdgeIndex f) {
    auto has = [&](const auto& pairs) {
      return std::find(pairs.begin(), pairs.end(), std::pair{e, f}) != pairs.end();
    };
    return has(twins.open_edge_pairs) || has(twins.closed_edge_pairs);
  };
  for (EdgeIndex e = 0; e < g.size(); ++e) {
    if (d.contains(e)) continue;
    for (EdgeIndex f = e + 1; f < g.size(); ++f) {
      if (d.contains(f)) continue;
      if ((g.edge_neighborhood(e) & d) != (g.edge_neighborhood(f) & d)) continue;
      if (!weak || !exempt(e, f)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_edge_locating(const Graph& g, const EdgeSubset& d) { return edge_locating_impl(g, d, false); }

bool is_weak_edge_locating(const Graph& g, const EdgeSubset& d) { return edge_locating_impl(g, d, true); }

bool is_feasible(const Graph& g, Parameter p, const VertexSubset& d) {
  switch (p) {
    case Parameter::dom: return is_dominating(g, d);
    case Parameter::total_dom: return is_total_dominating(g, d);
    case Parameter::loc_dom: return is_dominating(g, d) && is_locating(g, d);
    case Parameter::loc_total_dom: return is_total_dominating(g, d) && is_locating(g, d);
    default: return false;
  }
}

bool is_feasible(const Graph& g, Parameter p, const EdgeSubset& d) {
  switch (p) {
    case Parameter::edge_loc_dom: return is_edge_dominating(g, d) && is_edge_locating(g, d);
    case Parameter::edge_loc_total_dom: return is_edge_total_dominating(g, d) && is_edge_locating(g, d);
    case Parameter::weak_edge_loc_dom: return is_edge_dominating(g, d) && is_weak_edge_locating(g, d);
    default: return false;
  }
}

namespace {

/// Uniform view of the seven parameters: a universe of items (vertices or
/// edges), the sets that must meet D for each item to be dominated, and the
/// open neighborhoods whose traces on D must separate items outside D.
template <class Set>
class SubsetSearch {
 public:
  SubsetSearch(std::vector<Set> open, bool total, bool locating, std::vector<std::size_t> twin_class)
      : open_(std::move(open)), locating_(locating), twin_class_(std::move(twin_class)) {
    const std::size_t u = open_.size();
    dominators_ = open_;
    if (!total)
      for (std::size_t x = 0; x < u; ++x) dominators_[x].insert(x);
    suffix_.assign(u + 1, Set{});
    for (std::size_t i = u; i-- > 0;) {
      suffix_[i] = suffix_[i + 1];
      suffix_[i].insert(i);
    }
    if (twin_class_.empty()) {
      twin_class_.resize(u);
      for (std::size_t x = 0; x < u; ++x) twin_class_[x] = x;
    }
    signatures_.reserve(u);
  }

  std::size_t universe() const { return open_.size(); }

  bool feasible(const Set& d) {
    for (const auto& dom : dominators_)
      if (!dom.intersects(d)) return false;
    if (!locating_) return true;
    // Items outside D sharing a trace must all be twins (only possible for
    // the weak variant, where twin_class_ is coarser than identity).
    signatures_.clear();
    for (std::size_t x = 0; x < open_.size(); ++x)
      if (!d.contains(x)) signatures_.emplace_back(open_[x] & d, twin_class_[x]);
    std::sort(signatures_.begin(), signatures_.end());
    for (std::size_t i = 1; i < signatures_.size(); ++i)
      if (signatures_[i].first == signatures_[i - 1].first && signatures_[i].second != signatures_[i - 1].second)
        return false;
    return true;
  }

  /// Lexicographically least feasible subset of minimum size.
  std::optional<Set> minimum() {
    if (!feasible(suffix_[0])) return std::nullopt;
    for (std::size_t k = 0; k <= universe(); ++k) {
      Set chosen;
      if (descend(k, 0, chosen)) return chosen;
    }
    return std::nullopt;
  }

 private:
  // Some item can no longer be dominated if every dominator lies outside
  // the chosen items plus the untouched suffix.
  bool doomed(const Set& pool) const {
    for (const auto& dom : dominators_)
      if (!dom.intersects(pool)) return true;
    return false;
  }

  bool descend(std::size_t remaining, std::size_t start, Set& chosen) {
    if (remaining == 0) return feasible(chosen);
    const std::size_t u = universe();
    for (std::size_t i = start; i + remaining <= u; ++i) {
      chosen.insert(i);
      // Pools shrink as i grows, so the first doomed pool ends the loop.
      if (doomed(chosen | suffix_[i + 1])) {
        chosen.erase(i);
        break;
      }
      if (descend(remaining - 1, i + 1, chosen)) return true;
      chosen.erase(i);
    }
    return false;
  }

  std::vector<Set> open_;
  std::vector<Set> dominators_;
  std::vector<Set> suffix_;
  bool locating_;
  std::vector<std::size_t> twin_class_;
  std::vector<std::pair<Set, std::size_t>> signatures_;
};

std::string infeasible_reason(Parameter p) {
  if (is_edge_parameter(p)) return std::string(long_name(p)) + " needs a graph without isolated edges";
  return std::string(long_name(p)) + " needs a graph without isolated vertices";
}

SolveResult solve_vertex(const Graph& g, Parameter p) {
  std::vector<VertexSubset> open(g.order());
  for (Vertex v = 0; v < g.order(); ++v) open[v] = g.open_neighborhood(v);
  const bool total = p == Parameter::total_dom || p == Parameter::loc_total_dom;
  const bool locating = p == Parameter::loc_dom || p == Parameter::loc_total_dom;
  SubsetSearch<VertexSubset> search(std::move(open), total, locating, {});
  auto best = search.minimum();
  if (!best) throw Error(ErrorCode::Infeasible, infeasible_reason(p));
  return {p, best->size(), *best, true};
}

SolveResult solve_edge(const Graph& g, Parameter p) {
  std::vector<EdgeSubset> open(g.size());
  for (EdgeIndex e = 0; e < g.size(); ++e) open[e] = g.edge_neighborhood(e);
  const bool total = p == Parameter::edge_loc_total_dom;
  std::vector<std::size_t> classes;
  if (p == Parameter::weak_edge_loc_dom) classes = edge_twin_classes(g);
  SubsetSearch<EdgeSubset> search(std::move(open), total, true, std::move(classes));
  auto best = search.minimum();
  if (!best) throw Error(ErrorCode::Infeasible, infeasible_reason(p));
  return {p, best->size(), *best, true};
}

}  // namespace

SolveResult solve_min(const Graph& g, Parameter p) {
  return is_edge_parameter(p) ? solve_edge(g, p) : solve_vertex(g, p);
}

std::size_t solve_value(const Graph& g, Parameter p) { return solve_min(g, p).value; }

}  // namespace locdom
