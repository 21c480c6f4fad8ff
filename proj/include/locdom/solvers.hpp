#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "locdom/graph.hpp"

namespace locdom {

enum class Parameter {
  dom,                 // γ
  total_dom,           // γ_t
  loc_dom,             // γ_L
  loc_total_dom,       // γ_t^L
  edge_loc_dom,        // γ'_L
  edge_loc_total_dom,  // γ'_{t,L}
  weak_edge_loc_dom,   // γ'_wL
};

inline constexpr Parameter kAllParameters[] = {
    Parameter::dom,          Parameter::total_dom,          Parameter::loc_dom,          Parameter::loc_total_dom,
    Parameter::edge_loc_dom, Parameter::edge_loc_total_dom, Parameter::weak_edge_loc_dom,
};

/// Short name used in reports and on the command line: dom, tdom, ld, ltd, eld, eltd, weld.
std::string_view short_name(Parameter p);
std::string_view long_name(Parameter p);
/// Accepts either the short or the long name.
std::optional<Parameter> parse_parameter(std::string_view name);
bool is_edge_parameter(Parameter p);

// Vertex predicates.
bool is_dominating(const Graph& g, const VertexSubset& d);
bool is_total_dominating(const Graph& g, const VertexSubset& d);
/// v -> N(v) ∩ D is injective on V \ D.
bool is_locating(const Graph& g, const VertexSubset& d);

// Edge predicates.
bool is_edge_dominating(const Graph& g, const EdgeSubset& d);
/// Every edge of G, including those in D, has a neighbor in D.
bool is_edge_total_dominating(const Graph& g, const EdgeSubset& d);
/// e -> N(e) ∩ D is injective on E \ D.
bool is_edge_locating(const Graph& g, const EdgeSubset& d);
/// As is_edge_locating, but pairs of edge-twins of G are exempt.
bool is_weak_edge_locating(const Graph& g, const EdgeSubset& d);

/// Combined predicate for a parameter (vertex parameters take a VertexSubset,
/// edge parameters an EdgeSubset; a mismatched kind returns false).
bool is_feasible(const Graph& g, Parameter p, const VertexSubset& d);
bool is_feasible(const Graph& g, Parameter p, const EdgeSubset& d);

struct SolveResult {
  Parameter parameter;
  std::size_t value = 0;
  std::variant<VertexSubset, EdgeSubset> witness;
  bool optimal = true;
};

/// Exact minimum with the lexicographically least witness of that size.
/// Throws Infeasible when no feasible set exists (total variants with an
/// isolated vertex / isolated edge).
SolveResult solve_min(const Graph& g, Parameter p);

/// Value only; same search.
std::size_t solve_value(const Graph& g, Parameter p);

}  // namespace locdom
