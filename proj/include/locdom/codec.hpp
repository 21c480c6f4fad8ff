#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locdom/graph.hpp"
#include "locdom/report.hpp"

namespace locdom {

inline constexpr std::size_t kMaxGraph6Order = 62;

/// Decodes one graph6 record (short form, n <= 62). A leading ">>graph6<<"
/// header and trailing whitespace are ignored.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// "n m" header followed by m "u v" lines; any whitespace separates tokens.
Graph parse_edgelist(std::string_view text);
std::string write_edgelist(const Graph& g);

enum class GraphFormat { graph6, edgelist };

/// Reads every graph in `text`: one graph6 record per non-empty line, or a
/// single edge-list document. Detection: a first line made of two integers is
/// an edge list.
std::vector<Graph> parse_graphs(std::string_view text);
GraphFormat detect_format(std::string_view text);

/// One JSON object per check (or one per skipped record without checks),
/// newline-terminated, with a fixed field order.
std::string format_record(const BoundReport& report);
std::string write_report(std::span<const BoundReport> reports);

}  // namespace locdom
