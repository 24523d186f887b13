// gcx — command-line front end for the graph convexity library.
//
// Subcommands:
//   interval     compute a pair or tuple interval in a graph
//   hull         compute a convex hull (optionally its extreme points)
//   analyze      structural and convexity summary of a single graph
//   scan         run the verification checks over a corpus of graphs
//   consistency  cross-check the configuration tables against the catalog
//   catalog      print the built-in pattern families
//
// Exit codes: 0 on success (and all checks passing), 1 when a scan or
// consistency run reports a failing row, 2 on usage, parse, or capacity
// errors.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcx/consistency.hpp"
#include "gcx/convexity.hpp"
#include "gcx/graph.hpp"
#include "gcx/graph6.hpp"
#include "gcx/harness.hpp"
#include "gcx/patterns.hpp"

namespace {

std::string format_set(gcx::VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (gcx::Vertex v : s) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  out += "}";
  return out;
}

gcx::VertexSet make_set(const std::vector<int>& vertices) {
  gcx::VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= gcx::kMaxVertices) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is outside the representable range 0.." +
                                  std::to_string(gcx::kMaxVertices - 1));
    }
    s = s.with(v);
  }
  return s;
}

gcx::ConvexityKind parse_kind(const std::string& text) {
  if (text == "geodesic") return gcx::ConvexityKind::geodesic();
  if (text == "monophonic") return gcx::ConvexityKind::monophonic();
  if (text == "m3-path") return gcx::ConvexityKind::m3_path();
  if (text == "m33") return gcx::ConvexityKind::m33();
  for (const char* prefix : {"monophonic-", "steiner-"}) {
    if (text.rfind(prefix, 0) == 0) {
      const std::string digits = text.substr(std::string(prefix).size());
      try {
        std::size_t used = 0;
        int k = std::stoi(digits, &used);
        if (used == digits.size()) {
          return *prefix == 'm' ? gcx::ConvexityKind::monophonic_k(k)
                                : gcx::ConvexityKind::steiner_k(k);
        }
      } catch (const std::exception&) {
        // fall through to the unified error below
      }
    }
  }
  throw std::invalid_argument(
      "unknown convexity kind: " + text +
      " (known: geodesic, monophonic, monophonic-<k>, m3-path, m33, steiner-<k>)");
}

int run_interval(const std::string& graph_arg, const std::string& kind,
                 const std::vector<int>& vertices) {
  gcx::Graph g = gcx::load_graph_argument(graph_arg);
  auto expect_pair = [&]() -> std::pair<gcx::Vertex, gcx::Vertex> {
    if (vertices.size() != 2) {
      throw std::invalid_argument("kind " + kind + " takes exactly two vertices");
    }
    return {vertices[0], vertices[1]};
  };
  gcx::VertexSet result;
  if (kind == "geodesic") {
    auto [u, v] = expect_pair();
    result = gcx::geodesic_interval(g, u, v);
  } else if (kind == "monophonic") {
    auto [u, v] = expect_pair();
    result = gcx::monophonic_interval(g, u, v);
  } else if (kind == "m3") {
    auto [u, v] = expect_pair();
    result = gcx::m3_interval(g, u, v);
  } else if (kind == "monophonic-set") {
    result = gcx::monophonic_interval_set(g, make_set(vertices));
  } else if (kind == "m3-set") {
    result = gcx::m3_interval_set(g, make_set(vertices));
  } else if (kind == "m3-lower") {
    result = gcx::m3_lower_interval(g, make_set(vertices));
  } else if (kind == "steiner") {
    result = gcx::steiner_interval(g, make_set(vertices));
  } else {
    throw std::invalid_argument(
        "unknown interval kind: " + kind +
        " (known: geodesic, monophonic, m3, monophonic-set, m3-set, m3-lower, "
        "steiner)");
  }
  std::cout << format_set(result) << "\n";
  return 0;
}

int run_hull(const std::string& graph_arg, const std::string& kind_name,
             const std::vector<int>& vertices, bool extreme) {
  gcx::Graph g = gcx::load_graph_argument(graph_arg);
  gcx::ConvexityKind kind = parse_kind(kind_name);
  gcx::IntervalOracle oracle(g);
  gcx::VertexSet h = gcx::hull(oracle, kind, make_set(vertices));
  if (extreme) {
    std::cout << format_set(gcx::extreme_points(oracle, kind, h)) << "\n";
  } else {
    std::cout << format_set(h) << "\n";
  }
  return 0;
}

int run_analyze(const std::string& graph_arg) {
  gcx::Graph g = gcx::load_graph_argument(graph_arg);
  nlohmann::ordered_json doc;
  doc["graph6"] = gcx::write_graph6(g);
  doc["order"] = g.order();
  doc["edge_count"] = g.edge_count();
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  doc["connected"] = gcx::is_connected(g);
  doc["chordal"] = gcx::is_chordal(g);
  doc["house_free"] = !gcx::contains_induced_member(g, gcx::catalog_family("house"));
  doc["hole_free"] = !gcx::has_hole(g);
  doc["domino_free"] = !gcx::contains_induced_member(g, gcx::catalog_family("domino"));
  doc["fan3_free"] = !gcx::contains_induced_member(g, gcx::catalog_family("fan3"));
  doc["tc4_free"] = !gcx::contains_induced_member(g, gcx::catalog_family("tc4"));
  doc["a_free"] = gcx::is_a_free(g);
  doc["hhd_free"] = gcx::is_hhd_free(g);
  doc["hhda_free"] = gcx::is_hhda_free(g);
  if (g.order() <= gcx::kAlignmentCap) {
    gcx::IntervalOracle oracle(g);
    nlohmann::ordered_json geometries;
    for (gcx::ConvexityKind kind :
         {gcx::ConvexityKind::geodesic(), gcx::ConvexityKind::monophonic(),
          gcx::ConvexityKind::m3_path(), gcx::ConvexityKind::m33(),
          gcx::ConvexityKind::monophonic_k(3), gcx::ConvexityKind::steiner_k(3)}) {
      geometries[kind.name()] = gcx::is_convex_geometry(oracle, kind).ok;
    }
    doc["convex_geometries"] = std::move(geometries);
  } else {
    doc["convex_geometries"] = nullptr;
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

gcx::CorpusSpec corpus_from_options(const std::string& orders,
                                    const std::string& file) {
  if (!orders.empty() && !file.empty()) {
    throw std::invalid_argument("give either --orders or --file, not both");
  }
  if (!orders.empty()) {
    const std::size_t sep = orders.find("..");
    int lo = 0;
    int hi = 0;
    try {
      if (sep == std::string::npos) {
        std::size_t used = 0;
        lo = hi = std::stoi(orders, &used);
        if (used != orders.size()) throw std::invalid_argument(orders);
      } else {
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const std::string lo_text = orders.substr(0, sep);
        const std::string hi_text = orders.substr(sep + 2);
        lo = std::stoi(lo_text, &used_lo);
        hi = std::stoi(hi_text, &used_hi);
        if (used_lo != lo_text.size() || used_hi != hi_text.size()) {
          throw std::invalid_argument(orders);
        }
      }
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("cannot parse order range: " + orders +
                                  " (expected <n> or <min>..<max>)");
    }
    return gcx::CorpusSpec::range(lo, hi);
  }
  if (!file.empty()) {
    if (file == "-") return gcx::CorpusSpec::list(gcx::read_graph6_stream(std::cin));
    return gcx::CorpusSpec::file(file);
  }
  throw std::invalid_argument("give a corpus via --orders or --file");
}

int run_scan(const std::string& orders, const std::string& file,
             const std::vector<std::string>& checks, int jobs,
             const std::string& out_json, const std::string& out_csv) {
  gcx::CorpusSpec spec = corpus_from_options(orders, file);
  const auto started = std::chrono::steady_clock::now();
  gcx::CheckReport report =
      gcx::run_checks(spec.materialize(), gcx::resolve_checks(checks), jobs,
                      spec.describe());
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - started;

  std::cout << "corpus: " << report.corpus << " (" << report.rows.size()
            << " graphs)\n";
  for (const std::string& name : report.check_names) {
    std::cout << name << ": pass=" << report.count(name, gcx::CheckStatus::Pass)
              << " fail=" << report.count(name, gcx::CheckStatus::Fail)
              << " skipped=" << report.count(name, gcx::CheckStatus::Skipped)
              << "\n";
  }
  for (const gcx::CheckRow& row : report.rows) {
    for (std::size_t i = 0; i < report.check_names.size(); ++i) {
      if (row.outcomes[i].status == gcx::CheckStatus::Fail) {
        std::cout << "FAIL " << row.graph6 << " " << report.check_names[i]
                  << " witness=" << row.outcomes[i].witness.dump() << "\n";
      }
    }
  }
  if (!out_json.empty()) {
    std::ofstream out(out_json);
    if (!out) throw std::runtime_error("cannot write file: " + out_json);
    out << report.to_json().dump(2) << "\n";
  }
  if (!out_csv.empty()) {
    std::ofstream out(out_csv);
    if (!out) throw std::runtime_error("cannot write file: " + out_csv);
    out << report.to_csv();
  }
  std::cerr << "scan wall clock: " << elapsed.count() << " s\n";
  return report.all_pass() ? 0 : 1;
}

int run_consistency() {
  gcx::ConsistencyReport report = gcx::consistency_check();
  for (const gcx::ConfigurationResult& result : report.configurations) {
    std::cout << (result.pass ? "pass " : "FAIL ") << result.name << " ["
              << result.family << "]";
    if (!result.pass) {
      std::cout << " unmatched completions:";
      for (const gcx::CompletionResult& completion : result.completions) {
        if (completion.member < 0) std::cout << " mask=" << completion.mask;
      }
    }
    std::cout << "\n";
  }
  for (const gcx::MemberCountResult& row : report.member_counts) {
    std::cout << (row.pass ? "pass " : "FAIL ") << row.family << " member "
              << row.member
              << ": three-steiner-simplicial count = " << row.three_steiner_simplicial
              << "\n";
  }
  std::cout << "configurations failing: " << report.failed_configurations << "/"
            << report.configurations.size() << "\n";
  std::cout << "member counts failing: " << report.failed_member_counts << "/"
            << report.member_counts.size() << "\n";
  return report.all_pass ? 0 : 1;
}

int run_catalog(bool emit_g6) {
  std::vector<const gcx::PatternFamily*> families;
  for (const gcx::PatternFamily& family : gcx::catalog()) families.push_back(&family);
  std::sort(families.begin(), families.end(),
            [](const gcx::PatternFamily* a, const gcx::PatternFamily* b) {
              return a->name() < b->name();
            });
  for (const gcx::PatternFamily* family : families) {
    std::cout << family->name() << ": order=" << family->order()
              << " members=" << family->member_count() << "\n";
    for (int i = 0; i < family->member_count(); ++i) {
      gcx::Graph member = family->member(i);
      std::cout << "  member " << i << ":";
      for (auto [u, v] : member.edges()) std::cout << " " << u << "-" << v;
      if (emit_g6) std::cout << "  g6=" << gcx::write_graph6(member);
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph convexity toolkit"};
  app.require_subcommand(1);

  std::string graph_arg;
  std::string kind;
  std::vector<int> vertices;
  bool extreme = false;

  CLI::App* interval = app.add_subcommand("interval", "compute an interval");
  interval->add_option("--graph", graph_arg,
                       "graph6 literal, file path, or - for stdin")
      ->required();
  interval
      ->add_option("--kind", kind,
                   "geodesic|monophonic|m3|monophonic-set|m3-set|m3-lower|steiner")
      ->required();
  interval->add_option("--vertices", vertices, "comma-separated vertex list")
      ->required()
      ->delimiter(',');

  CLI::App* hull = app.add_subcommand("hull", "compute a convex hull");
  hull->add_option("--graph", graph_arg,
                   "graph6 literal, file path, or - for stdin")
      ->required();
  hull->add_option(
          "--kind", kind,
          "geodesic|monophonic|monophonic-<k>|m3-path|m33|steiner-<k>")
      ->required();
  hull->add_option("--set", vertices, "comma-separated vertex list")
      ->required()
      ->delimiter(',');
  hull->add_flag("--extreme", extreme, "print the hull's extreme points instead");

  CLI::App* analyze = app.add_subcommand("analyze", "summarise one graph");
  analyze
      ->add_option("--graph", graph_arg,
                   "graph6 literal, file path, or - for stdin")
      ->required();

  std::string orders;
  std::string corpus_file;
  std::vector<std::string> checks;
  int jobs = 1;
  std::string out_json;
  std::string out_csv;

  CLI::App* scan = app.add_subcommand("scan", "run checks over a corpus");
  scan->add_option("--orders", orders,
                   "connected graph classes by order, e.g. 1..6 or 5");
  scan->add_option("--file", corpus_file, "graph6 file (- for stdin)");
  scan->add_option("--checks", checks, "check names (default: all)")
      ->delimiter(',');
  scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--out", out_json, "write the full JSON report here");
  scan->add_option("--csv", out_csv, "write a status-only CSV here");

  CLI::App* consistency = app.add_subcommand(
      "consistency", "cross-check the configuration tables against the catalog");
  (void)consistency;

  bool emit_g6 = false;
  CLI::App* catalog =
      app.add_subcommand("catalog", "print the built-in pattern families");
  catalog->add_flag("--emit-g6", emit_g6, "also print each member in graph6");

  try {
    app.parse(argc, argv);
    if (interval->parsed()) return run_interval(graph_arg, kind, vertices);
    if (hull->parsed()) return run_hull(graph_arg, kind, vertices, extreme);
    if (analyze->parsed()) return run_analyze(graph_arg);
    if (scan->parsed())
      return run_scan(orders, corpus_file, checks, jobs, out_json, out_csv);
    if (consistency->parsed()) return run_consistency();
    if (catalog->parsed()) return run_catalog(emit_g6);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gcx::capacity_error& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
