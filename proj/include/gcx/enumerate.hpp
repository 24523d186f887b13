#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "gcx/canonical.hpp"
#include "gcx/graph.hpp"

namespace gcx {

/// Caps for the two enumeration strategies.  Deduplicated enumeration
/// canonicalizes every candidate, so it shares the canonicalizer cap; raw
/// labeled enumeration walks all 2^(n(n-1)/2) masks and stops earlier.
inline constexpr int kDedupCap = 8;
inline constexpr int kLabeledCap = 7;

/// All isomorphism-class representatives of order n (connected or not),
/// each stored as its canonical graph, sorted by canonical form.  Memoized;
/// safe to call from several threads.
inline const std::vector<Graph>& graph_classes(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  if (n > kDedupCap) {
    throw capacity_error("class enumeration handles at most " + std::to_string(kDedupCap) +
                         " vertices, got " + std::to_string(n));
  }

  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;

  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // Build levels 0..n.  Every class of order k arises from some class of
  // order k-1 by attaching one vertex with some neighborhood, so extending
  // every representative by every neighborhood mask and deduplicating by
  // canonical form is exhaustive.
  if (cache.find(0) == cache.end()) cache[0] = {Graph(0)};
  for (int k = 1; k <= n; ++k) {
    if (cache.find(k) != cache.end()) continue;
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> reps;
    for (const Graph& base : cache[k - 1]) {
      std::uint32_t limit = std::uint32_t{1} << (k - 1);
      for (std::uint32_t mask = 0; mask < limit; ++mask) {
        Graph candidate = base.with_vertex(VertexSet{mask});
        std::string form = canonical_form(candidate);
        if (seen.insert(form).second) {
          reps.emplace_back(std::move(form), canonical_graph(candidate));
        }
      }
    }
    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph>& level = cache[k];
    level.reserve(reps.size());
    for (auto& [form, rep] : reps) level.push_back(std::move(rep));
  }
  return cache[n];
}

/// Visits graphs of order n.  dedup: one canonical representative per
/// isomorphism class (cap kDedupCap).  Otherwise: every labeled graph, one
/// per adjacency mask (cap kLabeledCap).  connected_only filters after
/// generation.
template <typename Visitor>
void for_each_graph(int n, bool connected_only, bool dedup, Visitor&& visit) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  if (dedup) {
    for (const Graph& g : graph_classes(n)) {
      if (!connected_only || is_connected(g)) visit(g);
    }
    return;
  }
  if (n > kLabeledCap) {
    throw capacity_error("labeled enumeration handles at most " + std::to_string(kLabeledCap) +
                         " vertices, got " + std::to_string(n));
  }
  int bits = n * (n - 1) / 2;
  std::vector<std::pair<Vertex, Vertex>> pair_of_bit;
  pair_of_bit.reserve(bits);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pair_of_bit.emplace_back(i, j);
  std::uint32_t limit = std::uint32_t{1} << bits;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    Graph g(n);
    for (int b = 0; b < bits; ++b) {
      if ((mask >> b) & 1u) g = g.with_edge(pair_of_bit[b].first, pair_of_bit[b].second);
    }
    if (!connected_only || is_connected(g)) visit(g);
  }
}

inline std::vector<Graph> all_graphs(int n, bool connected_only, bool dedup) {
  std::vector<Graph> out;
  for_each_graph(n, connected_only, dedup, [&](const Graph& g) { out.push_back(g); });
  return out;
}

inline std::size_t count_graphs(int n, bool connected_only, bool dedup) {
  std::size_t count = 0;
  for_each_graph(n, connected_only, dedup, [&](const Graph&) { ++count; });
  return count;
}

}  // namespace gcx
