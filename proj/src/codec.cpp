#include "locdom/codec.hpp"

#include <cctype>
#include <charconv>
#include <json.hpp>
#include <sstream>

namespace locdom {
namespace {

constexpr char kGraph6Header[] = ">>graph6<<";

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t to_index(std::string_view token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw Error(ErrorCode::BadSyntax, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(sizeof(kGraph6Header) - 1);
  if (line.empty()) throw Error(ErrorCode::BadLength, "empty graph6 record");
  for (char c : line) {
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw Error(ErrorCode::BadCharacter, "byte " + std::to_string(b));
  }
  if (line[0] == 126) throw Error(ErrorCode::TooLarge, "long-form graph6 (n > 62) is not supported");

  const std::size_t n = static_cast<std::size_t>(line[0] - 63);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != 1 + bytes)
    throw Error(ErrorCode::BadLength, "expected " + std::to_string(1 + bytes) + " bytes for n=" + std::to_string(n) +
                                          ", got " + std::to_string(line.size()));

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = line[1 + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) pairs.emplace_back(i, j);
    }
  }
  return Graph::build(n, pairs);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) throw Error(ErrorCode::TooLarge, "graph6 short form needs n <= 62");
  std::string out(1, static_cast<char>(63 + n));
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph parse_edgelist(std::string_view text) {
  auto toks = tokens(text);
  if (toks.size() < 2) throw Error(ErrorCode::HeaderMismatch, "missing 'n m' header");
  const std::size_t n = to_index(toks[0]);
  const std::size_t m = to_index(toks[1]);
  if (toks.size() != 2 + 2 * m)
    throw Error(ErrorCode::HeaderMismatch, "header declares " + std::to_string(m) + " edges, found " +
                                               std::to_string((toks.size() - 2) / 2) +
                                               ((toks.size() % 2) != 0 ? " and a dangling token" : ""));
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) pairs.emplace_back(to_index(toks[2 + 2 * i]), to_index(toks[3 + 2 * i]));
  return Graph::build(n, pairs);
}

std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

GraphFormat detect_format(std::string_view text) {
  text = trim(text);
  auto eol = text.find('\n');
  auto first = tokens(text.substr(0, eol));
  if (first.size() == 2) {
    bool numeric = true;
    for (auto t : first)
      for (char c : t) numeric = numeric && std::isdigit(static_cast<unsigned char>(c));
    if (numeric) return GraphFormat::edgelist;
  }
  return GraphFormat::graph6;
}

std::vector<Graph> parse_graphs(std::string_view text) {
  if (trim(text).empty()) return {};
  if (detect_format(text) == GraphFormat::edgelist) return {parse_edgelist(text)};
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto eol = text.find('\n', start);
    auto line = trim(text.substr(start, eol == std::string_view::npos ? std::string_view::npos : eol - start));
    if (!line.empty() && line != kGraph6Header) out.push_back(parse_graph6(line));
    if (eol == std::string_view::npos) break;
    start = eol + 1;
  }
  return out;
}

std::string format_record(const BoundReport& report) {
  using Json = nlohmann::ordered_json;
  auto base = [&] {
    Json j;
    j["graph6"] = report.graph6;
    j["n"] = report.n;
    j["m"] = report.m;
    return j;
  };
  auto skip = [&]() -> Json {
    if (report.skipped_reason) return std::string(to_string(*report.skipped_reason));
    return nullptr;
  };

  std::string out;
  if (report.checks.empty()) {
    Json j = base();
    j["param"] = report.parameter;
    j["value"] = nullptr;
    j["relation"] = nullptr;
    j["bound"] = nullptr;
    j["margin"] = nullptr;
    j["holds"] = nullptr;
    j["skipped_reason"] = skip();
    out += j.dump();
    out += '\n';
    return out;
  }
  for (const auto& c : report.checks) {
    Json j = base();
    j["param"] = c.parameter;
    j["value"] = c.value;
    j["relation"] = c.relation == Relation::equal ? "eq" : "le";
    j["bound"] = c.bound.to_string();
    j["margin"] = (c.bound - Rational(static_cast<std::int64_t>(c.value))).to_string();
    j["holds"] = c.holds;
    j["skipped_reason"] = skip();
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string write_report(std::span<const BoundReport> reports) {
  std::string out;
  for (const auto& r : reports) out += format_record(r);
  return out;
}

}  // namespace locdom
