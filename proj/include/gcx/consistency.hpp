#pragma once

// Cross-validation of the pattern catalog against a table of partially
// determined graphs.  Each configuration fixes some adjacencies, forbids
// others, and leaves a few pairs open; the claim under test is that every
// admitted completion is isomorphic to a member of one named catalog family.
// A second table of claims bounds the number of locally unclustered vertices
// in the catalog members themselves.  The checker records every mismatch
// rather than stopping, so a report can show exactly which claims hold.

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcx/canonical.hpp"
#include "gcx/convexity.hpp"
#include "gcx/graph.hpp"
#include "gcx/patterns.hpp"

namespace gcx {

/// A graph on labels.size() vertices with three disjoint pair classes:
/// present edges, absent edges, and undetermined pairs.  Together the three
/// classes must cover every vertex pair exactly once.  `admit` filters
/// completions by their unknown-edge bitmask (bit i = unknowns[i] present);
/// a null filter admits everything.
struct Configuration {
  using Edge = std::pair<Vertex, Vertex>;

  std::string name;
  std::string family;  // catalog family the completions should land in
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<Edge> non_edges;
  std::vector<Edge> unknowns;
  std::function<bool(unsigned)> admit;
};

namespace detail {

inline void validate_configuration(const Configuration& c) {
  int n = static_cast<int>(c.labels.size());
  std::vector<int> seen(static_cast<std::size_t>(n * n), 0);
  auto mark = [&](const Configuration::Edge& e) {
    Vertex u = e.first;
    Vertex v = e.second;
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v) {
      throw std::logic_error("configuration " + c.name + " lists an invalid pair");
    }
    ++seen[static_cast<std::size_t>(u * n + v)];
  };
  for (const auto& e : c.edges) mark(e);
  for (const auto& e : c.non_edges) mark(e);
  for (const auto& e : c.unknowns) mark(e);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (seen[static_cast<std::size_t>(u * n + v)] != 1) {
        throw std::logic_error("configuration " + c.name + " classifies the pair (" +
                               std::to_string(u) + ", " + std::to_string(v) +
                               ") " + std::to_string(seen[static_cast<std::size_t>(u * n + v)]) +
                               " times");
      }
    }
  }
}

}  // namespace detail

/// Index of the family member isomorphic to g, or -1 when none is.
inline int matching_member(const Graph& g, const PatternFamily& family) {
  if (g.order() != family.order()) return -1;
  std::string form = canonical_form(g);
  for (int i = 0; i < family.member_count(); ++i) {
    if (canonical_form(family.member(i)) == form) return i;
  }
  return -1;
}

/// The full configuration table.  Names are grouped by the scenario they
/// model: detour_* (walks that leave and re-enter a two-terminal interval),
/// tree_* (connecting trees for three terminals escaping a neighborhood),
/// and a_* (paths interacting with the legs of the square-with-legs
/// pattern).
inline std::vector<Configuration> consistency_configurations() {
  using E = Configuration::Edge;
  std::vector<Configuration> out;
  auto add = [&](std::string name, std::string family, std::vector<std::string> labels,
                 std::vector<E> edges, std::vector<E> non_edges, std::vector<E> unknowns = {},
                 std::function<bool(unsigned)> admit = nullptr) {
    out.push_back(Configuration{std::move(name), std::move(family), std::move(labels),
                                std::move(edges), std::move(non_edges), std::move(unknowns),
                                std::move(admit)});
    detail::validate_configuration(out.back());
  };

  add("detour_same_path_house", "house", {"x'", "u", "w", "y", "z"},
      {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 4}},
      {{0, 2}, {0, 4}, {1, 3}, {3, 4}});
  add("detour_same_path_house_tail", "house", {"x'", "u", "z", "y", "z'"},
      {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {2, 4}, {3, 4}},
      {{0, 2}, {0, 4}, {1, 3}, {1, 4}});
  add("detour_same_path_domino", "domino", {"x'", "u", "z", "m", "z'", "y"},
      {{0, 1}, {0, 5}, {1, 2}, {2, 5}, {2, 3}, {3, 4}, {4, 5}},
      {{0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 3}, {1, 4}, {3, 5}, {2, 4}});
  add("detour_disjoint_paths_house_a", "house", {"vL", "v", "vR", "u'", "u"},
      {{0, 1}, {1, 2}, {0, 3}, {2, 3}, {3, 4}, {0, 4}},
      {{0, 2}, {1, 3}, {1, 4}, {2, 4}});
  add("detour_disjoint_paths_house_b", "house", {"u", "u'", "w", "v", "vL"},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {0, 4}},
      {{0, 2}, {0, 3}, {1, 3}, {2, 4}});
  add("detour_disjoint_paths_domino_a", "domino", {"u'", "u", "r", "vL", "v", "w"},
      {{0, 1}, {0, 5}, {0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}},
      {{0, 2}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}});
  add("detour_disjoint_paths_domino_b", "domino", {"u'", "u", "s", "vR", "v", "vL"},
      {{0, 1}, {0, 5}, {0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}},
      {{0, 2}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}});
  add("detour_disjoint_paths_domino_c", "domino", {"u'", "u", "r", "vR", "v", "vL"},
      {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 5}, {3, 4}, {4, 5}},
      {{0, 2}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}});
  add("detour_len3_reentry_house", "house", {"u", "u'", "vR", "v", "w"},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {0, 2}},
      {{0, 3}, {0, 4}, {1, 3}, {2, 4}});
  add("detour_len3_reentry_domino_r", "domino", {"u'", "u", "r", "vR", "v", "w"},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}},
      {{0, 2}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}});
  add("detour_len3_reentry_domino_s", "domino", {"u'", "u", "s", "vR", "v", "w"},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}},
      {{0, 2}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}});
  add("detour_len3_house_mid", "house", {"v2", "v3", "v", "vL", "vR"},
      {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {1, 4}},
      {{0, 2}, {0, 4}, {1, 3}, {3, 4}}, {{0, 3}});
  add("detour_len3_house_left", "house", {"u", "v2", "v3", "v", "vL"},
      {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}},
      {{0, 2}, {0, 3}, {1, 3}, {2, 4}}, {{1, 4}});
  add("detour_len3_house_right", "house", {"u", "v2", "v3", "v", "vR"},
      {{0, 1}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
      {{0, 2}, {0, 3}, {1, 3}});
  add("detour_len3_ttc4", "tc4", {"u", "v2", "v3", "v", "vL", "vR"},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {2, 5}, {1, 5}},
      {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {4, 5}, {2, 4}}, {{1, 4}});
  add("detour_reentry_house", "house", {"s", "t", "b''L", "b''", "b''R"},
      {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {0, 2}},
      {{0, 3}, {0, 4}, {1, 3}, {2, 4}});
  add("detour_reentry_domino", "domino", {"s", "c", "t", "b''L", "b''", "b''R"},
      {{0, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {1, 3}, {0, 1}},
      {{0, 3}, {0, 4}, {0, 5}, {2, 4}, {1, 2}, {3, 5}, {1, 4}, {1, 5}});
  add("detour_reentry_ttc4", "tc4", {"t", "v", "b''", "b''L", "b''R", "d"},
      {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {2, 4}, {4, 5}},
      {{0, 2}, {0, 5}, {1, 4}, {1, 5}, {2, 5}, {3, 4}, {3, 5}}, {{1, 3}});

  add("tree_escape_house_t", "house", {"w1", "w2", "x", "w3", "t3"},
      {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {1, 4}},
      {{0, 3}, {1, 3}, {2, 4}, {0, 4}});
  add("tree_escape_rtc4", "rc4", {"w1", "w2", "w3", "x", "s3", "t3"},
      {{0, 1}, {0, 3}, {1, 3}, {2, 3}, {2, 5}, {1, 5}, {0, 5}, {2, 4}, {0, 4}, {1, 4}},
      {{0, 2}, {1, 2}, {3, 5}, {3, 4}, {4, 5}});
  add("tree_escape_house_s", "house", {"s3", "w3", "t3", "w2", "x"},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {0, 4}},
      {{0, 2}, {0, 3}, {2, 4}, {1, 3}});
  add("tree_escape_rtc4_xs", "rc4", {"w1", "w2", "w3", "x", "s3", "t3"},
      {{0, 1}, {0, 3}, {1, 3}, {2, 3}, {3, 4}, {2, 5}, {1, 5}, {0, 5}, {2, 4}, {0, 4}, {1, 4}},
      {{0, 2}, {1, 2}, {3, 5}, {4, 5}});
  add("tree_triple_same_neighbors_rtc4", "rc4", {"w1", "w2", "w3", "s1", "t1", "x"},
      {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {0, 5}, {1, 5}, {2, 5}},
      {{3, 4}, {0, 2}, {1, 2}}, {{0, 1}, {3, 5}, {4, 5}},
      [](unsigned mask) { return !(((mask >> 1) & 1u) && ((mask >> 2) & 1u)); });
  add("tree_triple_disjoint_rtc4", "rc4", {"w1", "w2", "w3", "t1", "t3", "x"},
      {{0, 3}, {2, 4}, {2, 3}, {0, 4}, {1, 3}, {1, 4}, {0, 5}, {1, 5}, {2, 5}},
      {{3, 5}, {4, 5}, {0, 2}, {1, 2}}, {{3, 4}, {0, 1}});
  add("tree_triple_shared_house", "house", {"s1", "w1", "t1", "x", "w3"},
      {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {2, 3}, {0, 4}},
      {{0, 2}, {0, 3}, {1, 4}, {2, 4}});
  add("tree_triple_shared_rtc4", "rc4", {"w1", "w2", "w3", "s1", "t1", "x"},
      {{0, 3}, {0, 4}, {2, 4}, {2, 3}, {1, 3}, {1, 4}, {0, 5}, {1, 5}, {2, 5}, {4, 5}},
      {{3, 4}, {3, 5}, {0, 2}, {1, 2}}, {{0, 1}});
  add("tree_triple_shared_rtc4_a", "rc4", {"w1", "w2", "w3", "t1", "t3", "x"},
      {{0, 3}, {2, 4}, {2, 3}, {0, 4}, {1, 3}, {1, 4}, {0, 5}, {1, 5}, {2, 5}},
      {{3, 5}, {4, 5}, {0, 2}, {1, 2}}, {{3, 4}, {0, 1}});
  add("tree_triple_shared_rtc4_b", "rc4", {"w1", "w2", "w3", "s1", "t3", "x"},
      {{0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {0, 5}, {1, 5}, {2, 5}},
      {{3, 5}, {4, 5}, {3, 4}, {0, 2}, {1, 2}}, {{0, 1}});

  add("a_short_path_domino", "domino", {"a", "w1", "u2", "u1", "u4", "u3"},
      {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {2, 5}, {4, 5}, {3, 4}},
      {{0, 2}, {0, 5}, {0, 4}, {1, 3}, {1, 5}, {1, 4}, {3, 5}, {2, 4}});
  add("a_short_path_house", "house", {"w1", "u2", "u3", "u1", "u4"},
      {{0, 1}, {0, 3}, {1, 3}, {1, 2}, {2, 4}, {3, 4}},
      {{0, 2}, {0, 4}, {2, 3}, {1, 4}});
  add("a_short_path_ttc4", "tc4", {"u2", "w1", "u1", "u3", "u4", "b"},
      {{0, 2}, {0, 3}, {0, 1}, {3, 4}, {2, 4}, {1, 4}, {4, 5}},
      {{2, 3}, {0, 4}, {0, 5}, {2, 5}, {3, 5}, {1, 5}, {1, 3}}, {{1, 2}});
  add("a_short_path_hole", "c5", {"w1", "a", "u1", "u4", "u3"},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}},
      {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
  add("a_short_path_house2", "house", {"w1", "a", "u1", "u4", "u3"},
      {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {2, 3}, {3, 4}},
      {{0, 3}, {1, 3}, {1, 4}, {2, 4}});
  add("a_long_path_house", "house", {"wk", "u1", "u2", "u3", "u4"},
      {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {1, 4}},
      {{0, 3}, {0, 4}, {1, 3}, {2, 4}});
  add("a_long_path_ttc4_b", "tc4", {"u4", "u1", "u3", "wk", "u2", "b"},
      {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 3}, {1, 4}, {2, 4}, {3, 4}},
      {{0, 4}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 5}, {4, 5}});
  add("a_long_path_ttc4_a", "tc4", {"u1", "wk", "u2", "u3", "u4", "a"},
      {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {3, 4}},
      {{0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}, {4, 5}});
  add("a_exit_len2_house", "house", {"wk", "u2", "v1", "u4", "b"},
      {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {2, 4}, {3, 4}},
      {{0, 2}, {0, 4}, {1, 3}, {1, 4}});
  add("a_exit_hole", "c5", {"wk", "u2", "v1", "v2", "u4"},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}},
      {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
  add("a_exit_house_j2", "house", {"wk", "u2", "v1", "v2", "u4"},
      {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {2, 4}, {3, 4}},
      {{0, 2}, {0, 3}, {1, 3}, {1, 4}});
  add("a_exit_hole_j", "c5", {"u4", "v1", "v2", "v3", "v4"},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}},
      {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
  add("a_exit_domino_j3", "domino", {"wk", "u2", "v1", "v2", "v3", "u4"},
      {{0, 1}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}},
      {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 5}});

  return out;
}

/// One completion of a configuration: the subset of unknown pairs realised
/// as edges, and where it landed in the claimed family (-1 = nowhere).
struct CompletionResult {
  unsigned mask = 0;
  std::vector<Configuration::Edge> chosen;
  int member = -1;
  bool matches = false;
};

struct ConfigurationResult {
  std::string name;
  std::string family;
  bool pass = false;  // every admitted completion matched
  std::vector<CompletionResult> completions;
};

/// Count of three-steiner-simplicial vertices in one catalog member, with
/// the claim that there is at most one.
struct MemberCountResult {
  std::string family;
  int member = 0;
  int three_steiner_simplicial = 0;
  bool pass = false;
};

struct ConsistencyReport {
  std::vector<ConfigurationResult> configurations;
  std::vector<MemberCountResult> member_counts;
  int failed_configurations = 0;
  int failed_member_counts = 0;
  bool all_pass = false;
};

/// Families whose members are claimed to have at most one
/// three-steiner-simplicial vertex.
inline const std::vector<std::string>& counted_families() {
  static const std::vector<std::string> names = {"house", "c5",  "c6",  "c7",
                                                 "c8",    "domino", "rc4", "tc4"};
  return names;
}

inline ConsistencyReport consistency_check() {
  ConsistencyReport report;
  for (const Configuration& config : consistency_configurations()) {
    ConfigurationResult result;
    result.name = config.name;
    result.family = config.family;
    result.pass = true;
    const PatternFamily& family = catalog_family(config.family);
    unsigned limit = 1u << config.unknowns.size();
    for (unsigned mask = 0; mask < limit; ++mask) {
      if (config.admit && !config.admit(mask)) continue;
      Graph g(static_cast<int>(config.labels.size()));
      for (const auto& e : config.edges) g = g.with_edge(e.first, e.second);
      CompletionResult completion;
      completion.mask = mask;
      for (std::size_t i = 0; i < config.unknowns.size(); ++i) {
        if ((mask >> i) & 1u) {
          g = g.with_edge(config.unknowns[i].first, config.unknowns[i].second);
          completion.chosen.push_back(config.unknowns[i]);
        }
      }
      completion.member = matching_member(g, family);
      completion.matches = completion.member >= 0;
      if (!completion.matches) result.pass = false;
      result.completions.push_back(std::move(completion));
    }
    if (!result.pass) ++report.failed_configurations;
    report.configurations.push_back(std::move(result));
  }
  for (const std::string& name : counted_families()) {
    const PatternFamily& family = catalog_family(name);
    for (int i = 0; i < family.member_count(); ++i) {
      Graph g = family.member(i);
      MemberCountResult row;
      row.family = name;
      row.member = i;
      row.three_steiner_simplicial =
          three_steiner_simplicial_vertices(g, g.vertices()).count();
      row.pass = row.three_steiner_simplicial <= 1;
      if (!row.pass) ++report.failed_member_counts;
      report.member_counts.push_back(std::move(row));
    }
  }
  report.all_pass =
      report.failed_configurations == 0 && report.failed_member_counts == 0;
  return report;
}

}  // namespace gcx
