#pragma once

// Batch verification harness: a registry of named per-graph checks, a corpus
// abstraction (enumerated classes, graph6 files, or explicit lists), and a
// runner that applies checks across a corpus — optionally on several threads
// — and renders the outcome as JSON or CSV.  Reports are byte-identical
// regardless of the thread count: rows are sorted up front and partitioned
// statically by index.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gcx/canonical.hpp"
#include "gcx/convexity.hpp"
#include "gcx/enumerate.hpp"
#include "gcx/graph.hpp"
#include "gcx/graph6.hpp"
#include "gcx/intervals.hpp"
#include "gcx/patterns.hpp"

namespace gcx {

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

struct CheckOutcome {
  CheckStatus status = CheckStatus::Pass;
  std::string reason;               // set on skips
  nlohmann::ordered_json witness;   // set on failures

  static CheckOutcome pass() { return {CheckStatus::Pass, "", nullptr}; }
  static CheckOutcome fail(nlohmann::ordered_json witness) {
    return {CheckStatus::Fail, "", std::move(witness)};
  }
  static CheckOutcome skipped(std::string reason) {
    return {CheckStatus::Skipped, std::move(reason), nullptr};
  }
};

/// Lazily computed per-graph facts shared by all checks run on one graph.
class GraphContext {
 public:
  explicit GraphContext(Graph g) : g_(std::move(g)) {}

  const Graph& graph() const { return g_; }

  const IntervalOracle& oracle() {
    if (!oracle_) oracle_.emplace(g_);
    return *oracle_;
  }

  bool connected() { return memo(connected_, [&] { return is_connected(g_); }); }
  bool chordal() { return memo(chordal_, [&] { return is_chordal(g_); }); }
  bool house_free() {
    return memo(house_free_, [&] { return is_free_of(g_, catalog_family("house")); });
  }
  bool hole_free() { return memo(hole_free_, [&] { return !has_hole(g_); }); }
  bool domino_free() {
    return memo(domino_free_, [&] { return is_free_of(g_, catalog_family("domino")); });
  }
  bool tc4_free() {
    return memo(tc4_free_, [&] { return is_free_of(g_, catalog_family("tc4")); });
  }
  bool fan3_free() {
    return memo(fan3_free_, [&] { return is_free_of(g_, catalog_family("fan3")); });
  }
  bool a_free() { return memo(a_free_, [&] { return is_a_free(g_); }); }
  bool hhd_free() { return house_free() && hole_free() && domino_free(); }
  bool hhda_free() { return hhd_free() && a_free(); }
  bool m33_geometry() {
    return memo(m33_geometry_, [&] {
      return is_convex_geometry(oracle(), ConvexityKind::m33()).ok;
    });
  }

 private:
  template <typename F>
  bool memo(std::optional<bool>& slot, F&& compute) {
    if (!slot) slot = compute();
    return *slot;
  }

  Graph g_;
  std::optional<IntervalOracle> oracle_;
  std::optional<bool> connected_;
  std::optional<bool> chordal_;
  std::optional<bool> house_free_;
  std::optional<bool> hole_free_;
  std::optional<bool> domino_free_;
  std::optional<bool> tc4_free_;
  std::optional<bool> fan3_free_;
  std::optional<bool> a_free_;
  std::optional<bool> m33_geometry_;
};

struct CheckDef {
  std::string name;
  std::string summary;
  std::function<CheckOutcome(GraphContext&)> run;
};

namespace detail {

inline nlohmann::ordered_json set_json(VertexSet s) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

inline nlohmann::ordered_json vertex_list_json(const std::vector<Vertex>& vs) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (Vertex v : vs) out.push_back(v);
  return out;
}

inline CheckOutcome check_geometry_a_free(GraphContext& ctx) {
  if (!ctx.connected()) return CheckOutcome::skipped("disconnected");
  if (!ctx.m33_geometry()) return CheckOutcome::skipped("not a convex geometry");
  if (ctx.a_free()) return CheckOutcome::pass();
  std::vector<Vertex> embedding;
  for_each_induced_embedding(ctx.graph(), catalog_family("a").member(0),
                             [&](const std::vector<Vertex>& image) {
                               embedding = image;
                               return false;
                             });
  return CheckOutcome::fail({{"a_embedding", vertex_list_json(embedding)}});
}

inline CheckOutcome check_m3_closure(GraphContext& ctx) {
  if (!ctx.connected()) return CheckOutcome::skipped("disconnected");
  if (!ctx.m33_geometry()) return CheckOutcome::skipped("not a convex geometry");
  const Graph& g = ctx.graph();
  for (Vertex a : g.vertices()) {
    for (Vertex b : g.vertices()) {
      if (b <= a) continue;
      VertexSet interval = ctx.oracle().monophonic_pair(a, b);
      if (interval.empty()) continue;  // endpoints in different components
      VertexSet closure = m3_interval_set(g, interval);
      if (!closure.subset_of(interval)) {
        return CheckOutcome::fail({{"pair", nlohmann::ordered_json::array({a, b})},
                                   {"interval", set_json(interval)},
                                   {"escaped", set_json(closure - interval)}});
      }
    }
  }
  return CheckOutcome::pass();
}

inline CheckOutcome check_m3_sets_closure(GraphContext& ctx) {
  if (!ctx.connected()) return CheckOutcome::skipped("disconnected");
  if (!ctx.m33_geometry()) return CheckOutcome::skipped("not a convex geometry");
  const Graph& g = ctx.graph();
  for (Vertex a : g.vertices()) {
    for (Vertex b : g.vertices()) {
      if (b <= a) continue;
      VertexSet interval = ctx.oracle().monophonic_pair(a, b);
      if (interval.empty()) continue;
      VertexSet closure = m3_lower_interval(g, interval);
      if (!closure.subset_of(interval)) {
        return CheckOutcome::fail({{"pair", nlohmann::ordered_json::array({a, b})},
                                   {"interval", set_json(interval)},
                                   {"escaped", set_json(closure - interval)}});
      }
    }
  }
  return CheckOutcome::pass();
}

inline CheckOutcome check_a_interval(GraphContext& ctx) {
  if (!ctx.connected()) return CheckOutcome::skipped("disconnected");
  if (!(ctx.house_free() && ctx.hole_free() && ctx.domino_free() && ctx.tc4_free())) {
    return CheckOutcome::skipped("contains house/hole/domino/tc4");
  }
  const Graph& g = ctx.graph();
  // Pattern roles: 0 and 1 are the leg tips, 3 is the square vertex opposite
  // the leg at 2.
  Graph pattern = catalog_family("a").member(0);
  CheckOutcome outcome = CheckOutcome::pass();
  bool any = false;
  for_each_induced_embedding(g, pattern, [&](const std::vector<Vertex>& image) {
    any = true;
    VertexSet interval = ctx.oracle().monophonic_pair(image[0], image[1]);
    if (interval.contains(image[3])) {
      outcome = CheckOutcome::fail(
          {{"embedding", vertex_list_json(image)},
           {"pair", nlohmann::ordered_json::array({image[0], image[1]})},
           {"interval", set_json(interval)},
           {"vertex", image[3]}});
      return false;
    }
    return true;
  });
  if (!any) return CheckOutcome::skipped("no induced a pattern");
  return outcome;
}

inline CheckOutcome check_ss_cover(GraphContext& ctx) {
  if (!ctx.connected()) return CheckOutcome::skipped("disconnected");
  if (!ctx.hhda_free()) return CheckOutcome::skipped("not hhda-free");
  const Graph& g = ctx.graph();
  VertexSet ss = semisimplicial_vertices(g, g.vertices());
  VertexSet covered = ss;
  for (Vertex x : ss) {
    for (Vertex y : ss) {
      if (y <= x) continue;
      covered |= ctx.oracle().m3_pair(x, y);
    }
  }
  if (covered == g.vertices()) return CheckOutcome::pass();
  Vertex uncovered = (g.vertices() - covered).min();
  return CheckOutcome::fail(
      {{"vertex", uncovered}, {"semisimplicial", set_json(ss)}});
}

inline CheckOutcome check_nbhd_m3_convex(GraphContext& ctx) {
  if (!ctx.connected()) return CheckOutcome::skipped("disconnected");
  const Graph& g = ctx.graph();
  bool hhd = ctx.hhd_free();
  bool neighborhoods_convex = true;
  VertexSet bad_set;
  std::uint32_t limit = std::uint32_t{1} << g.order();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    VertexSet s(mask);
    if (!is_connected_set(g, s)) continue;
    VertexSet closed = closed_neighborhood(g, s);
    if (!is_convex(ctx.oracle(), ConvexityKind::m3_path(), closed)) {
      neighborhoods_convex = false;
      bad_set = s;
      break;
    }
  }
  if (hhd == neighborhoods_convex) return CheckOutcome::pass();
  nlohmann::ordered_json witness = {{"hhd_free", hhd},
                                    {"neighborhoods_convex", neighborhoods_convex}};
  if (!neighborhoods_convex) {
    witness["set"] = set_json(bad_set);
    witness["closed_neighborhood"] = set_json(closed_neighborhood(g, bad_set));
  }
  return CheckOutcome::fail(std::move(witness));
}

inline CheckOutcome check_classical_geometries(GraphContext& ctx) {
  if (!ctx.connected()) return CheckOutcome::skipped("disconnected");
  struct Claim {
    ConvexityKind kind;
    bool characterization;
  };
  const Claim claims[] = {
      {ConvexityKind::geodesic(), ctx.chordal() && ctx.fan3_free()},
      {ConvexityKind::monophonic(), ctx.chordal()},
      {ConvexityKind::m3_path(), ctx.hhda_free()},
  };
  for (const Claim& claim : claims) {
    GeometryResult geometry = is_convex_geometry(ctx.oracle(), claim.kind);
    if (geometry.ok != claim.characterization) {
      nlohmann::ordered_json witness = {{"kind", claim.kind.name()},
                                        {"geometry", geometry.ok},
                                        {"characterization", claim.characterization}};
      if (geometry.witness) {
        witness["convex_set"] = set_json(geometry.witness->convex_set);
        witness["extreme"] = set_json(geometry.witness->extreme);
        witness["hull"] = set_json(geometry.witness->hull);
      }
      return CheckOutcome::fail(std::move(witness));
    }
  }
  return CheckOutcome::pass();
}

inline CheckOutcome check_extreme_points(GraphContext& ctx) {
  if (!ctx.connected()) return CheckOutcome::skipped("disconnected");
  const Graph& g = ctx.graph();
  if (g.order() > 6) return CheckOutcome::skipped("capacity");
  struct Claim {
    ConvexityKind kind;
    bool (*local)(const Graph&, VertexSet, Vertex);
  };
  const Claim claims[] = {
      {ConvexityKind::geodesic(), &is_simplicial},
      {ConvexityKind::monophonic(), &is_simplicial},
      {ConvexityKind::m3_path(), &is_semisimplicial},
      {ConvexityKind::steiner_k(3), &is_three_steiner_simplicial},
  };
  for (const Claim& claim : claims) {
    for (VertexSet convex : convex_sets(ctx.oracle(), claim.kind)) {
      VertexSet extreme = extreme_points(ctx.oracle(), claim.kind, convex);
      VertexSet local;
      for (Vertex v : convex) {
        if (claim.local(g, convex, v)) local = local.with(v);
      }
      if (extreme != local) {
        return CheckOutcome::fail({{"kind", claim.kind.name()},
                                   {"set", set_json(convex)},
                                   {"extreme", set_json(extreme)},
                                   {"local", set_json(local)}});
      }
    }
  }
  return CheckOutcome::pass();
}

}  // namespace detail

/// The check registry, in report order.
inline const std::vector<CheckDef>& all_checks() {
  static const std::vector<CheckDef> checks = {
      {"geometry-a-free",
       "a connected graph whose m33 convexity is a convex geometry avoids the a pattern",
       &detail::check_geometry_a_free},
      {"m3-closure",
       "when the m33 convexity is a convex geometry, every monophonic pair "
       "interval is closed under pairwise long-path intervals",
       &detail::check_m3_closure},
      {"m3-sets-closure",
       "when the m33 convexity is a convex geometry, every monophonic pair "
       "interval is closed under 3-set monophonic intervals",
       &detail::check_m3_sets_closure},
      {"a-interval",
       "in house/hole/domino/tc4-free graphs no embedded a pattern puts its far "
       "square vertex on the leg tips' monophonic interval",
       &detail::check_a_interval},
      {"ss-cover",
       "in hhda-free graphs every vertex is semisimplicial or on a long induced "
       "path between semisimplicial vertices",
       &detail::check_ss_cover},
      {"nbhd-m3-convex",
       "hhd-freeness is equivalent to every connected set having an m3-convex "
       "closed neighborhood",
       &detail::check_nbhd_m3_convex},
      {"classical-geometries",
       "geodesic/monophonic/m3 convex geometries match their forbidden-pattern "
       "characterizations",
       &detail::check_classical_geometries},
      {"extreme-points",
       "extreme points of convex sets match the local simpliciality notions",
       &detail::check_extreme_points},
  };
  return checks;
}

inline std::vector<CheckDef> resolve_checks(const std::vector<std::string>& names) {
  if (names.empty()) return all_checks();
  std::vector<CheckDef> out;
  for (const std::string& name : names) {
    bool found = false;
    for (const CheckDef& check : all_checks()) {
      if (check.name == name) {
        out.push_back(check);
        found = true;
        break;
      }
    }
    if (!found) {
      std::string known;
      for (const CheckDef& check : all_checks()) {
        if (!known.empty()) known += ", ";
        known += check.name;
      }
      throw std::invalid_argument("unknown check: " + name + " (known: " + known + ")");
    }
  }
  return out;
}

/// Where the graphs come from: an enumerated order range (connected classes
/// up to isomorphism), a graph6 file, or an explicit list.
struct CorpusSpec {
  enum class Kind { Range, File, Vector };

  Kind kind = Kind::Range;
  int min_order = 1;
  int max_order = 1;
  std::string path;
  std::vector<Graph> graphs;

  static CorpusSpec range(int min_order, int max_order) {
    CorpusSpec spec;
    spec.kind = Kind::Range;
    spec.min_order = min_order;
    spec.max_order = max_order;
    return spec;
  }

  static CorpusSpec file(std::string path) {
    CorpusSpec spec;
    spec.kind = Kind::File;
    spec.path = std::move(path);
    return spec;
  }

  static CorpusSpec list(std::vector<Graph> graphs) {
    CorpusSpec spec;
    spec.kind = Kind::Vector;
    spec.graphs = std::move(graphs);
    return spec;
  }

  std::string describe() const {
    switch (kind) {
      case Kind::Range:
        return "connected classes, orders " + std::to_string(min_order) + ".." +
               std::to_string(max_order);
      case Kind::File:
        return "graph6 file: " + path;
      case Kind::Vector:
        return "explicit list of " + std::to_string(graphs.size()) + " graphs";
    }
    return "unknown";
  }

  std::vector<Graph> materialize() const {
    switch (kind) {
      case Kind::Range: {
        if (min_order < 1 || max_order < min_order) {
          throw std::invalid_argument("order range must satisfy 1 <= min <= max");
        }
        std::vector<Graph> out;
        for (int n = min_order; n <= max_order; ++n) {
          for_each_graph(n, /*connected_only=*/true, /*dedup=*/true,
                         [&](const Graph& g) { out.push_back(g); });
        }
        return out;
      }
      case Kind::File:
        return read_graph6_file(path);
      case Kind::Vector:
        return graphs;
    }
    return {};
  }
};

struct CheckRow {
  std::string graph6;
  std::vector<CheckOutcome> outcomes;  // aligned with the report's check list
};

struct CheckReport {
  std::string corpus;
  std::vector<std::string> check_names;
  std::vector<CheckRow> rows;

  int count(const std::string& check, CheckStatus status) const {
    std::size_t column = index_of(check);
    int total = 0;
    for (const CheckRow& row : rows) {
      if (row.outcomes[column].status == status) ++total;
    }
    return total;
  }

  bool all_pass() const {
    for (const CheckRow& row : rows) {
      for (const CheckOutcome& outcome : row.outcomes) {
        if (outcome.status == CheckStatus::Fail) return false;
      }
    }
    return true;
  }

  const CheckOutcome* outcome_for(const std::string& graph6, const std::string& check) const {
    std::size_t column = index_of(check);
    for (const CheckRow& row : rows) {
      if (row.graph6 == graph6) return &row.outcomes[column];
    }
    return nullptr;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json doc;
    doc["meta"] = {{"corpus", corpus},
                   {"checks", check_names},
                   {"caps",
                    {{"vertices", kMaxVertices},
                     {"canonical", kCanonicalCap},
                     {"dedup", kDedupCap},
                     {"labeled", kLabeledCap},
                     {"alignment", kAlignmentCap}}}};
    doc["results"] = nlohmann::ordered_json::array();
    for (const CheckRow& row : rows) {
      nlohmann::ordered_json outcomes;
      for (std::size_t i = 0; i < check_names.size(); ++i) {
        const CheckOutcome& outcome = row.outcomes[i];
        nlohmann::ordered_json entry = {{"status", to_string(outcome.status)}};
        if (outcome.status == CheckStatus::Skipped) entry["reason"] = outcome.reason;
        if (outcome.status == CheckStatus::Fail) entry["witness"] = outcome.witness;
        outcomes[check_names[i]] = std::move(entry);
      }
      doc["results"].push_back({{"graph6", row.graph6}, {"outcomes", std::move(outcomes)}});
    }
    nlohmann::ordered_json summary;
    for (const std::string& name : check_names) {
      summary[name] = {{"pass", count(name, CheckStatus::Pass)},
                       {"fail", count(name, CheckStatus::Fail)},
                       {"skipped", count(name, CheckStatus::Skipped)}};
    }
    doc["summary"] = std::move(summary);
    return doc;
  }

  std::string to_csv() const {
    std::string out = "graph6";
    for (const std::string& name : check_names) {
      out += ",";
      out += name;
    }
    out += "\n";
    for (const CheckRow& row : rows) {
      out += row.graph6;
      for (const CheckOutcome& outcome : row.outcomes) {
        out += ",";
        out += to_string(outcome.status);
      }
      out += "\n";
    }
    return out;
  }

 private:
  std::size_t index_of(const std::string& check) const {
    for (std::size_t i = 0; i < check_names.size(); ++i) {
      if (check_names[i] == check) return i;
    }
    throw std::invalid_argument("report has no check named " + check);
  }
};

namespace detail {

inline std::string row_sort_key(const Graph& g) {
  if (g.order() <= kCanonicalCap) return canonical_form(g);
  std::string key(1, static_cast<char>(g.order()));
  return key + write_graph6(g);
}

}  // namespace detail

/// Runs the given checks over the given graphs.  Rows come out sorted by
/// canonical form (order first), so the report does not depend on the input
/// order or on `jobs`.  A capacity overflow inside a check records the
/// outcome "skipped: capacity" instead of aborting the run.
inline CheckReport run_checks(std::vector<Graph> graphs,
                              const std::vector<CheckDef>& checks, int jobs = 1,
                              std::string corpus_description = "explicit list") {
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");
  if (checks.empty()) throw std::invalid_argument("no checks selected");
  std::stable_sort(graphs.begin(), graphs.end(), [](const Graph& a, const Graph& b) {
    return detail::row_sort_key(a) < detail::row_sort_key(b);
  });
  CheckReport report;
  report.corpus = std::move(corpus_description);
  for (const CheckDef& check : checks) report.check_names.push_back(check.name);
  report.rows.resize(graphs.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < graphs.size(); i += stride) {
      GraphContext ctx(graphs[i]);
      CheckRow& row = report.rows[i];
      row.graph6 = write_graph6(graphs[i]);
      for (const CheckDef& check : checks) {
        try {
          row.outcomes.push_back(check.run(ctx));
        } catch (const capacity_error&) {
          row.outcomes.push_back(CheckOutcome::skipped("capacity"));
        }
      }
    }
  };
  if (jobs == 1 || graphs.size() <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back(work, static_cast<std::size_t>(t),
                           static_cast<std::size_t>(jobs));
    }
    for (std::thread& worker : workers) worker.join();
  }
  return report;
}

inline CheckReport run_corpus(const CorpusSpec& spec,
                              const std::vector<std::string>& check_names,
                              int jobs = 1) {
  return run_checks(spec.materialize(), resolve_checks(check_names), jobs,
                    spec.describe());
}

}  // namespace gcx
