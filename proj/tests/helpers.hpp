#pragma once

// Shared fixtures and deliberately naive reference implementations used to
// cross-check the library's optimised searches.

#include <algorithm>
#include <vector>

#include "gcx/enumerate.hpp"
#include "gcx/graph.hpp"

namespace testutil {

inline gcx::Graph path_graph(int n) {
  gcx::Graph g(n);
  for (gcx::Vertex v = 0; v + 1 < n; ++v) g = g.with_edge(v, v + 1);
  return g;
}

inline gcx::Graph cycle_graph(int n) {
  gcx::Graph g = path_graph(n);
  return g.with_edge(0, n - 1);
}

inline gcx::Graph complete_graph(int n) {
  gcx::Graph g(n);
  for (gcx::Vertex u = 0; u < n; ++u)
    for (gcx::Vertex v = u + 1; v < n; ++v) g = g.with_edge(u, v);
  return g;
}

/// Square 2-3-4-5 with pendant 0 hanging on 2 and pendant 1 hanging on 5.
inline gcx::Graph a_graph() {
  return gcx::Graph::from_edges(
      6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}, {1, 5}});
}

/// Square 0-1-2-3 with roof vertex 4 on top of the 0-1 edge.
inline gcx::Graph house_graph() {
  return gcx::Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
}

/// Two disjoint edges: 0-1 and 2-3.
inline gcx::Graph two_edges_graph() {
  return gcx::Graph::from_edges(4, {{0, 1}, {2, 3}});
}

namespace detail {

inline void simple_path_descend(const gcx::Graph& g, gcx::Vertex target,
                                std::vector<gcx::Vertex>& path,
                                std::vector<std::vector<gcx::Vertex>>& out) {
  if (path.back() == target) {
    out.push_back(path);
    return;
  }
  for (gcx::Vertex w : g.neighbors(path.back())) {
    if (std::find(path.begin(), path.end(), w) != path.end()) continue;
    path.push_back(w);
    simple_path_descend(g, target, path, out);
    path.pop_back();
  }
}

}  // namespace detail

/// Every simple u-v path, discovered without any pruning.
inline std::vector<std::vector<gcx::Vertex>> brute_simple_paths(const gcx::Graph& g,
                                                                gcx::Vertex u,
                                                                gcx::Vertex v) {
  std::vector<std::vector<gcx::Vertex>> out;
  std::vector<gcx::Vertex> path{u};
  detail::simple_path_descend(g, v, path, out);
  return out;
}

inline bool path_is_induced(const gcx::Graph& g, const std::vector<gcx::Vertex>& path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 2; j < path.size(); ++j) {
      if (g.adjacent(path[i], path[j])) return false;
    }
  }
  return true;
}

/// Reference induced-path enumeration: filter the full simple-path list.
inline std::vector<std::vector<gcx::Vertex>> brute_induced_paths(const gcx::Graph& g,
                                                                 gcx::Vertex u,
                                                                 gcx::Vertex v,
                                                                 int min_edges) {
  std::vector<std::vector<gcx::Vertex>> out;
  for (const auto& path : brute_simple_paths(g, u, v)) {
    if (static_cast<int>(path.size()) - 1 >= min_edges && path_is_induced(g, path)) {
      out.push_back(path);
    }
  }
  return out;
}

namespace detail {

inline void injection_descend(const gcx::Graph& g, const gcx::Graph& pattern,
                              std::vector<gcx::Vertex>& image,
                              std::vector<std::vector<gcx::Vertex>>& out) {
  if (static_cast<int>(image.size()) == pattern.order()) {
    for (int i = 0; i < pattern.order(); ++i) {
      for (int j = i + 1; j < pattern.order(); ++j) {
        if (pattern.adjacent(i, j) !=
            g.adjacent(image[static_cast<std::size_t>(i)],
                       image[static_cast<std::size_t>(j)])) {
          return;
        }
      }
    }
    out.push_back(image);
    return;
  }
  for (gcx::Vertex cand : g.vertices()) {
    if (std::find(image.begin(), image.end(), cand) != image.end()) continue;
    image.push_back(cand);
    injection_descend(g, pattern, image, out);
    image.pop_back();
  }
}

}  // namespace detail

/// Reference embedding enumeration: try every injective tuple and test the
/// adjacency correspondence at the end.
inline std::vector<std::vector<gcx::Vertex>> brute_embeddings(const gcx::Graph& g,
                                                              const gcx::Graph& pattern) {
  std::vector<std::vector<gcx::Vertex>> out;
  std::vector<gcx::Vertex> image;
  detail::injection_descend(g, pattern, image, out);
  return out;
}

inline std::vector<std::vector<gcx::Vertex>> sorted_paths(
    std::vector<std::vector<gcx::Vertex>> paths) {
  std::sort(paths.begin(), paths.end());
  return paths;
}

}  // namespace testutil
