#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

/// Hard cap for canonicalization (the packed adjacency code must fit the
/// search budget; 8 vertices = 28 upper-triangle bits).
inline constexpr int kCanonicalCap = 8;

/// Label-invariant vertex coloring by iterated degree refinement.  Two
/// vertices get equal colors only if no round of (own color, multiset of
/// neighbor colors) separates them.  Color ids themselves are canonical:
/// they are ranks of sorted signatures, so relabeling the graph permutes
/// vertices but not the color a given vertex ends up with.
inline std::vector<int> invariant_coloring(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n, 0);
  if (n == 0) return color;

  // Round zero: rank by degree.
  {
    std::vector<int> degrees;
    for (Vertex v = 0; v < n; ++v) degrees.push_back(g.degree(v));
    std::vector<int> sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), degrees[v]) -
                                  sorted.begin());
    }
  }

  for (int round = 0; round < n; ++round) {
    using Signature = std::pair<int, std::vector<int>>;
    std::vector<Signature> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> around;
      for (Vertex w : g.neighbors(v)) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      sig[v] = {color[v], std::move(around)};
    }
    std::vector<Signature> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    int old_classes = 0;
    {
      std::vector<int> ids = color;
      std::sort(ids.begin(), ids.end());
      old_classes = static_cast<int>(std::unique(ids.begin(), ids.end()) - ids.begin());
    }
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                  sorted.begin());
    }
    if (static_cast<int>(sorted.size()) == old_classes) break;  // partition is stable
  }
  return color;
}

namespace detail {

struct CanonicalSearch {
  const Graph& g;
  int n;
  int total_bits;
  std::vector<int> required_color;  // color demanded at each position
  std::vector<int> color;
  std::vector<Vertex> assigned;  // position -> vertex
  std::vector<bool> used;
  std::uint64_t best = 0;
  bool have_best = false;
  std::vector<Vertex> best_assigned;

  explicit CanonicalSearch(const Graph& graph) : g(graph), n(graph.order()) {
    total_bits = n * (n - 1) / 2;
    color = invariant_coloring(g);
    std::vector<int> sorted_colors = color;
    std::sort(sorted_colors.begin(), sorted_colors.end());
    required_color = sorted_colors;
    assigned.resize(n);
    used.assign(n, false);
  }

  void run() { descend(0, 0); }

  void descend(int depth, std::uint64_t code) {
    if (depth == n) {
      if (!have_best || code > best) {
        best = code;
        have_best = true;
        best_assigned = assigned;
      }
      return;
    }

    // Candidates: unassigned vertices of the block color.  For depth >= 1
    // only those achieving the maximal adjacency column can lead to the
    // maximal code, since column bits outweigh everything appended later.
    std::uint64_t max_col = 0;
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || color[v] != required_color[depth]) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < depth; ++i) {
        col = (col << 1) | (g.adjacent(assigned[i], v) ? 1u : 0u);
      }
      if (candidates.empty() || col > max_col) {
        max_col = col;
        candidates.assign(1, v);
      } else if (col == max_col) {
        candidates.push_back(v);
      }
    }
    if (candidates.empty()) return;  // color block exhausted: dead branch

    std::uint64_t next_code = (code << depth) | max_col;
    if (depth > 0 && have_best) {
      int bits_so_far = depth * (depth + 1) / 2;
      if (next_code < (best >> (total_bits - bits_so_far))) return;
    }
    for (Vertex v : candidates) {
      used[v] = true;
      assigned[depth] = v;
      descend(depth + 1, next_code);
      used[v] = false;
    }
  }
};

inline void check_canonical_cap(const Graph& g, const char* op) {
  if (g.order() > kCanonicalCap) {
    throw capacity_error(std::string(op) + " handles at most " +
                         std::to_string(kCanonicalCap) + " vertices, got " +
                         std::to_string(g.order()));
  }
}

}  // namespace detail

/// Canonical form: a string equal for two graphs exactly when they are
/// isomorphic (byte layout: order, then the maximal packed upper-triangle
/// adjacency code, big-endian).  Requires order <= kCanonicalCap.
inline std::string canonical_form(const Graph& g) {
  detail::check_canonical_cap(g, "canonical_form");
  detail::CanonicalSearch search(g);
  search.run();
  std::string out;
  out.push_back(static_cast<char>(g.order()));
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<char>((search.best >> shift) & 0xff));
  }
  return out;
}

/// The canonically relabeled copy: same form for every member of the class.
inline Graph canonical_graph(const Graph& g) {
  detail::check_canonical_cap(g, "canonical_graph");
  detail::CanonicalSearch search(g);
  search.run();
  std::vector<Vertex> perm(g.order());  // old id -> canonical position
  for (int pos = 0; pos < g.order(); ++pos) perm[search.best_assigned[pos]] = pos;
  return g.relabeled(perm);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto degree_multiset = [](const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degree_multiset(a) != degree_multiset(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace gcx
