#include "locdom/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "locdom/codec.hpp"
#include "locdom/extremal.hpp"
#include "locdom/linegraph.hpp"
#include "locdom/solvers.hpp"
#include "locdom/twins.hpp"
#include "locdom/verify.hpp"

namespace locdom {
namespace {

struct InputOptions {
  std::string file;
  std::string graph6;
  std::string named;

  void attach(CLI::App* app) {
    auto* f = app->add_option("--in", file, "Read graphs from a file (graph6 lines or an edge list)");
    auto* g = app->add_option("--g6", graph6, "Inline graph6 record");
    auto* n = app->add_option("--named", named, "Catalogue graph, e.g. C6, K1,3, paw");
    f->excludes(g, n);
    g->excludes(n);
  }

  std::string read_text(std::istream& in) const {
    if (!file.empty()) {
      std::ifstream stream(file);
      if (!stream) throw Error(ErrorCode::BadSyntax, "cannot open '" + file + "'");
      return {std::istreambuf_iterator<char>(stream), {}};
    }
    return {std::istreambuf_iterator<char>(in), {}};
  }

  std::vector<Graph> graphs(std::istream& in) const {
    if (!graph6.empty()) return {parse_graph6(graph6)};
    if (!named.empty()) return {named_graph(named)};
    return parse_graphs(read_text(in));
  }
};

std::string edge_text(const Graph& g, EdgeIndex e) {
  return std::to_string(g.edges()[e].u) + "-" + std::to_string(g.edges()[e].v);
}

std::string witness_text(const Graph& g, const SolveResult& r) {
  std::string out;
  auto append = [&](const std::string& item) {
    if (!out.empty()) out += ' ';
    out += item;
  };
  if (const auto* edges = std::get_if<EdgeSubset>(&r.witness))
    edges->for_each([&](std::size_t e) { append(edge_text(g, e)); });
  else
    std::get<VertexSubset>(r.witness).for_each([&](std::size_t v) { append(std::to_string(v)); });
  return out;
}

nlohmann::ordered_json twin_json(const Graph& g) {
  const auto t = twin_report(g);
  auto edge_pairs = [&](const auto& pairs) {
    auto arr = nlohmann::ordered_json::array();
    for (auto [e, f] : pairs) arr.push_back({edge_text(g, e), edge_text(g, f)});
    return arr;
  };
  auto vertex_pairs = [](const auto& pairs) {
    auto arr = nlohmann::ordered_json::array();
    for (auto [u, v] : pairs) arr.push_back({u, v});
    return arr;
  };
  nlohmann::ordered_json j;
  j["graph6"] = write_graph6(g);
  j["twin_free"] = t.open_vertex_pairs.empty() && t.closed_vertex_pairs.empty();
  j["edge_twin_free"] = t.open_edge_pairs.empty() && t.closed_edge_pairs.empty();
  j["open_vertex_pairs"] = vertex_pairs(t.open_vertex_pairs);
  j["closed_vertex_pairs"] = vertex_pairs(t.closed_vertex_pairs);
  j["open_edge_pairs"] = edge_pairs(t.open_edge_pairs);
  j["closed_edge_pairs"] = edge_pairs(t.closed_edge_pairs);
  return j;
}

Shard parse_shard(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument("no slash");
    std::size_t used = 0;
    Shard s{std::stoul(text.substr(0, slash), &used), std::stoul(text.substr(slash + 1))};
    if (used != slash || s.total == 0 || s.index >= s.total) throw std::invalid_argument("range");
    return s;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--shard", "expected i/t with 0 <= i < t, got '" + text + "'");
  }
}

GraphFormat parse_format(const std::string& name) {
  if (name == "g6" || name == "graph6") return GraphFormat::graph6;
  if (name == "edgelist") return GraphFormat::edgelist;
  throw CLI::ValidationError("format", "unknown format '" + name + "' (use g6 or edgelist)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact location-domination parameters of graphs and their edge analogues"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Minimum value and lexicographically least witness");
  std::string param_name;
  InputOptions solve_in;
  solve->add_option("--param", param_name, "dom|tdom|ld|ltd|eld|eltd|weld (or long names)")->required();
  solve_in.attach(solve);

  auto* twins = app.add_subcommand("twins", "Open/closed twins and edge-twins");
  InputOptions twins_in;
  twins_in.attach(twins);

  auto* line = app.add_subcommand("linegraph", "Print L(G) as graph6");
  InputOptions line_in;
  line_in.attach(line);

  auto* gen = app.add_subcommand("gen", "Generate an extremal family member as graph6");
  std::string family;
  std::vector<std::string> gen_args;
  gen->add_option("--family", family, "spider <k2> <k4> | substar <k> | named <name>")
      ->required()
      ->check(CLI::IsMember({"spider", "substar", "named"}));
  gen->add_option("args", gen_args, "Family arguments");

  auto* verify = app.add_subcommand("verify", "Check a theorem over enumerated or supplied graphs");
  std::string theorem_name;
  std::size_t max_n = 0;
  std::size_t min_n = 1;
  std::string shard_text = "0/1";
  std::string verify_file;
  bool all_graphs = false;
  bool dedup = false;
  bool allow_large = false;
  bool serial = false;
  bool summary_only = false;
  int threads = 0;
  verify->add_option("--theorem", theorem_name, "weld_half|eld_half|eltd_two_thirds|cor_ld_line|cor_ltd_line|"
                                                "obs1|ore_half|cockayne_two_thirds|size6_eld3")
      ->required();
  auto* max_opt = verify->add_option("--max-n", max_n, "Largest order to enumerate");
  verify->add_option("--min-n", min_n, "Smallest order to enumerate")->capture_default_str();
  verify->add_option("--shard", shard_text, "Shard i/t of the labeled enumeration")->capture_default_str();
  auto* file_opt = verify->add_option("--in", verify_file, "graph6 file to verify instead of enumerating");
  verify->add_flag("--all-graphs", all_graphs, "Include disconnected graphs");
  verify->add_flag("--dedup", dedup, "Keep one labeled graph per isomorphism class");
  verify->add_flag("--allow-large", allow_large, "Permit orders 7 and 8 (hours-scale)");
  verify->add_flag("--serial", serial, "Use the single-threaded reference kernel");
  verify->add_option("--threads", threads, "OpenMP threads (0 = default)");
  verify->add_flag("--summary-only", summary_only, "Print only the summary line");
  max_opt->excludes(file_opt);

  auto* encode = app.add_subcommand("encode", "Convert between graph6 and edge-list text");
  std::string from_name;
  std::string to_name;
  InputOptions encode_in;
  encode->add_option("--from", from_name, "g6|edgelist")->required();
  encode->add_option("--to", to_name, "g6|edgelist")->required();
  encode_in.attach(encode);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*solve) {
      auto p = parse_parameter(param_name);
      if (!p) {
        err << "error: unknown parameter '" << param_name << "'\n";
        return kExitUsage;
      }
      for (const auto& g : solve_in.graphs(in)) {
        const auto r = solve_min(g, *p);
        const auto w = witness_text(g, r);
        out << r.value << (w.empty() ? "" : " ") << w << '\n';
      }
    } else if (*twins) {
      for (const auto& g : twins_in.graphs(in)) out << twin_json(g).dump() << '\n';
    } else if (*line) {
      for (const auto& g : line_in.graphs(in)) out << write_graph6(line_graph(g).line) << '\n';
    } else if (*gen) {
      auto count = [&](std::size_t i) -> std::size_t {
        if (i >= gen_args.size()) throw CLI::ValidationError("gen", "missing argument for family " + family);
        try {
          return std::stoul(gen_args[i]);
        } catch (const std::exception&) {
          throw CLI::ValidationError("gen", "expected a count, got '" + gen_args[i] + "'");
        }
      };
      Graph g;
      if (family == "spider") {
        g = spider_weld_tree(count(0), count(1));
      } else if (family == "substar") {
        g = subdivided_star_eltd(count(0));
      } else {
        if (gen_args.empty()) throw CLI::ValidationError("gen", "named family needs a name");
        g = named_graph(gen_args[0]);
      }
      out << write_graph6(g) << '\n';
    } else if (*verify) {
      auto theorem = parse_theorem(theorem_name);
      if (!theorem) {
        err << "error: unknown theorem '" << theorem_name << "'\n";
        return kExitUsage;
      }
      HarnessOptions options;
      options.parallel = !serial;
      options.threads = threads;
      RecordSink sink;
      if (!summary_only) sink = [&](const BoundReport& r) { out << format_record(r); };
      Summary summary;
      if (!verify_file.empty()) {
        InputOptions file_in;
        file_in.file = verify_file;
        const auto graphs = file_in.graphs(in);
        summary = verify_graphs(*theorem, graphs, options, sink);
      } else {
        if (max_n == 0) {
          err << "error: verify needs --max-n or --in\n";
          return kExitUsage;
        }
        if (max_n >= 7 && !allow_large) {
          err << "error: --max-n " << max_n << " needs --allow-large (consider --shard)\n";
          return kExitUsage;
        }
        EnumerationRange range{min_n, max_n, !all_graphs, dedup, parse_shard(shard_text)};
        summary = verify_enumerated(*theorem, range, options, sink);
      }
      out << summary.to_json() << '\n';
      return summary.violations == 0 ? kExitOk : kExitViolation;
    } else if (*encode) {
      const auto from = parse_format(from_name);
      const auto to = parse_format(to_name);
      std::vector<Graph> graphs;
      if (!encode_in.graph6.empty() || !encode_in.named.empty()) {
        graphs = encode_in.graphs(in);
      } else {
        const auto text = encode_in.read_text(in);
        graphs = from == GraphFormat::edgelist ? std::vector<Graph>{parse_edgelist(text)} : parse_graphs(text);
      }
      for (const auto& g : graphs) out << (to == GraphFormat::graph6 ? write_graph6(g) + "\n" : write_edgelist(g));
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return kExitOk;
}

}  // namespace locdom
