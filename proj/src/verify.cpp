#include "locdom/verify.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <json.hpp>

#include "locdom/codec.hpp"
#include "locdom/linegraph.hpp"
#include "locdom/solvers.hpp"
#include "locdom/twins.hpp"

namespace locdom {

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::weld_half: return "weld_half";
    case Theorem::eld_half: return "eld_half";
    case Theorem::eltd_two_thirds: return "eltd_two_thirds";
    case Theorem::cor_ld_line: return "cor_ld_line";
    case Theorem::cor_ltd_line: return "cor_ltd_line";
    case Theorem::obs1: return "obs1";
    case Theorem::ore_half: return "ore_half";
    case Theorem::cockayne_two_thirds: return "cockayne_two_thirds";
    case Theorem::size6_eld3: return "size6_eld3";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (auto t : kAllTheorems)
    if (name == to_string(t)) return t;
  return std::nullopt;
}

namespace {

std::int64_t as_int(std::size_t x) { return static_cast<std::int64_t>(x); }

std::string_view primary_parameter(Theorem t) {
  switch (t) {
    case Theorem::weld_half: return "weld";
    case Theorem::eld_half: return "eld";
    case Theorem::eltd_two_thirds: return "eltd";
    case Theorem::cor_ld_line: return "ld_line";
    case Theorem::cor_ltd_line: return "ltd_line";
    case Theorem::obs1: return "obs1";
    case Theorem::ore_half: return "dom";
    case Theorem::cockayne_two_thirds: return "tdom";
    case Theorem::size6_eld3: return "eld";
  }
  return "?";
}

/// Line-graph bound: the vertex parameter on L(G) against |V(L(G))| and
/// the edge parameter on G against m, which must agree.
void line_bound(const Graph& g, BoundReport& r, Parameter vertex_param, Parameter edge_param, Rational bound) {
  const auto map = line_graph(g);
  if (has_isolated_vertex(map.line)) {
    r.skipped_reason = SkipReason::isolated_vertex;
    return;
  }
  if (!is_twin_free(map.line)) {
    r.skipped_reason = SkipReason::not_edge_twin_free;
    return;
  }
  const auto on_line = solve_value(map.line, vertex_param);
  const auto direct = solve_value(g, edge_param);
  r.checks.push_back(make_check(r.parameter, on_line, bound));
  r.checks.push_back(make_check(std::string(short_name(edge_param)), direct, bound));
  const auto gap = on_line > direct ? on_line - direct : direct - on_line;
  r.checks.push_back(make_check("line_agreement", gap, Rational(0), Relation::equal));
}

}  // namespace

BoundReport evaluate(const Graph& g, Theorem theorem) {
  BoundReport r;
  r.graph6 = write_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.parameter = std::string(primary_parameter(theorem));
  const auto m = as_int(g.size());
  const auto n = as_int(g.order());

  auto skip = [&](SkipReason reason) {
    r.skipped_reason = reason;
    return r;
  };

  switch (theorem) {
    case Theorem::weld_half:
      if (has_isolated_edge(g)) return skip(SkipReason::isolated_edge);
      r.checks.push_back(make_check(r.parameter, solve_value(g, Parameter::weak_edge_loc_dom), Rational(m, 2)));
      break;
    case Theorem::eld_half:
    case Theorem::eltd_two_thirds: {
      if (has_isolated_edge(g)) return skip(SkipReason::isolated_edge);
      if (!is_edge_twin_free(g)) return skip(SkipReason::not_edge_twin_free);
      const bool half = theorem == Theorem::eld_half;
      const auto p = half ? Parameter::edge_loc_dom : Parameter::edge_loc_total_dom;
      r.checks.push_back(make_check(r.parameter, solve_value(g, p), half ? Rational(m, 2) : Rational(2 * m, 3)));
      break;
    }
    case Theorem::cor_ld_line:
      line_bound(g, r, Parameter::loc_dom, Parameter::edge_loc_dom, Rational(m, 2));
      break;
    case Theorem::cor_ltd_line:
      line_bound(g, r, Parameter::loc_total_dom, Parameter::edge_loc_total_dom, Rational(2 * m, 3));
      break;
    case Theorem::obs1:
      if (!is_connected(g)) return skip(SkipReason::disconnected);
      r.checks.push_back(make_check(r.parameter, check_observation1(g).size(), Rational(0), Relation::equal));
      break;
    case Theorem::ore_half:
      if (has_isolated_vertex(g)) return skip(SkipReason::isolated_vertex);
      r.checks.push_back(make_check(r.parameter, solve_value(g, Parameter::dom), Rational(n, 2)));
      break;
    case Theorem::cockayne_two_thirds:
      // Every component needs order >= 3.
      if (has_isolated_vertex(g)) return skip(SkipReason::isolated_vertex);
      if (has_isolated_edge(g)) return skip(SkipReason::isolated_edge);
      r.checks.push_back(make_check(r.parameter, solve_value(g, Parameter::total_dom), Rational(2 * n, 3)));
      break;
    case Theorem::size6_eld3:
      if (g.size() != 6) return skip(SkipReason::size_mismatch);
      if (has_isolated_edge(g)) return skip(SkipReason::isolated_edge);
      if (!is_edge_twin_free(g)) return skip(SkipReason::not_edge_twin_free);
      r.checks.push_back(make_check(r.parameter, solve_value(g, Parameter::edge_loc_dom), Rational(3), Relation::equal));
      // Disconnected instances are reported with their value but not asserted.
      if (!is_connected(g)) r.skipped_reason = SkipReason::disconnected;
      break;
  }
  return r;
}

std::vector<BoundReport> evaluate_batch_serial(std::span<const Graph> graphs, Theorem theorem) {
  std::vector<BoundReport> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(evaluate(g, theorem));
  return out;
}

std::vector<BoundReport> evaluate_batch_parallel(std::span<const Graph> graphs, Theorem theorem, int threads) {
  std::vector<BoundReport> out(graphs.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(graphs.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(team)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = evaluate(graphs[static_cast<std::size_t>(i)], theorem);
    } catch (...) {
#pragma omp critical(locdom_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

void Summary::add(const BoundReport& r) {
  ++graphs;
  if (r.skipped_reason) {
    ++skipped[*r.skipped_reason];
    return;
  }
  ++checked;
  if (r.violated()) {
    ++violations;
    violating_graph6.push_back(r.graph6);
  }
}

void Summary::merge(const Summary& other) {
  graphs += other.graphs;
  checked += other.checked;
  violations += other.violations;
  for (const auto& [reason, count] : other.skipped) skipped[reason] += count;
  violating_graph6.insert(violating_graph6.end(), other.violating_graph6.begin(), other.violating_graph6.end());
}

std::string Summary::to_json() const {
  nlohmann::ordered_json body;
  body["theorem"] = std::string(locdom::to_string(theorem));
  body["graphs"] = graphs;
  body["checked"] = checked;
  nlohmann::ordered_json skips = nlohmann::ordered_json::object();
  for (const auto& [reason, count] : skipped) skips[std::string(locdom::to_string(reason))] = count;
  body["skipped"] = skips;
  body["violations"] = violations;
  body["violating"] = violating_graph6;
  nlohmann::ordered_json j;
  j["summary"] = body;
  return j.dump();
}

namespace {

void flush(std::vector<Graph>& batch, Theorem theorem, const HarnessOptions& options, const RecordSink& sink,
           Summary& summary) {
  if (batch.empty()) return;
  const auto reports = options.parallel ? evaluate_batch_parallel(batch, theorem, options.threads)
                                        : evaluate_batch_serial(batch, theorem);
  for (const auto& r : reports) {
    summary.add(r);
    if (sink) sink(r);
  }
  batch.clear();
}

}  // namespace

Summary verify_enumerated(Theorem theorem, const EnumerationRange& range, const HarnessOptions& options,
                          const RecordSink& sink) {
  Summary summary;
  summary.theorem = theorem;
  std::vector<Graph> batch;
  for (std::size_t n = range.min_n; n <= range.max_n; ++n) {
    GraphStream stream({n, range.connected_only, range.dedup_isomorphic, range.shard});
    while (auto g = stream.next()) {
      batch.push_back(std::move(*g));
      if (batch.size() >= options.batch_size) flush(batch, theorem, options, sink, summary);
    }
  }
  flush(batch, theorem, options, sink, summary);
  return summary;
}

Summary verify_graphs(Theorem theorem, std::span<const Graph> graphs, const HarnessOptions& options,
                      const RecordSink& sink) {
  Summary summary;
  summary.theorem = theorem;
  for (std::size_t start = 0; start < graphs.size(); start += options.batch_size) {
    const auto len = std::min(options.batch_size, graphs.size() - start);
    std::vector<Graph> batch(graphs.begin() + static_cast<std::ptrdiff_t>(start),
                             graphs.begin() + static_cast<std::ptrdiff_t>(start + len));
    flush(batch, theorem, options, sink, summary);
  }
  return summary;
}

}  // namespace locdom
