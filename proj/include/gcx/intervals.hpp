#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

namespace detail {

inline void check_endpoint(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(g.order()));
  }
}

template <typename Visitor>
void induced_path_descend(const Graph& g, Vertex target, int min_edges,
                          std::vector<Vertex>& path, VertexSet used, VertexSet closed,
                          Visitor&& visit) {
  // Once the target is adjacent to a non-final path vertex, no extension of
  // this prefix can end in an induced path.
  if (closed.contains(target)) return;
  Vertex last = path.back();
  VertexSet candidates = (g.neighbors(last) - used) - closed;
  for (Vertex w : candidates) {
    if (w == target) {
      if (static_cast<int>(path.size()) >= min_edges) {
        path.push_back(w);
        visit(const_cast<const std::vector<Vertex>&>(path));
        path.pop_back();
      }
      continue;
    }
    path.push_back(w);
    induced_path_descend(g, target, min_edges, path, used.with(w),
                         closed | g.neighbors(last).with(last), visit);
    path.pop_back();
  }
}

}  // namespace detail

/// Visits every induced u-v path with at least `min_edges` edges, as a
/// vertex sequence starting at u and ending at v.  Each path is produced
/// exactly once (in one direction).  Separated endpoints simply produce
/// nothing.
template <typename Visitor>
void for_each_induced_path(const Graph& g, Vertex u, Vertex v, int min_edges, Visitor&& visit) {
  detail::check_endpoint(g, u);
  detail::check_endpoint(g, v);
  if (u == v) throw std::invalid_argument("path endpoints must differ");
  std::vector<Vertex> path{u};
  detail::induced_path_descend(g, v, min_edges, path, VertexSet::single(u),
                               VertexSet::empty_set(), visit);
}

inline std::vector<std::vector<Vertex>> induced_paths(const Graph& g, Vertex u, Vertex v,
                                                      int min_edges = 1) {
  std::vector<std::vector<Vertex>> out;
  for_each_induced_path(g, u, v, min_edges, [&](const std::vector<Vertex>& p) { out.push_back(p); });
  return out;
}

/// Geodesic interval: vertices on shortest u-v paths.  u == v gives {u};
/// separated endpoints are an error.
inline VertexSet geodesic_interval(const Graph& g, Vertex u, Vertex v) {
  detail::check_endpoint(g, u);
  detail::check_endpoint(g, v);
  if (u == v) return VertexSet::single(u);
  std::vector<int> du = bfs_distances(g, u);
  if (du[v] < 0) {
    throw std::invalid_argument("no path between " + std::to_string(u) + " and " +
                                std::to_string(v));
  }
  std::vector<int> dv = bfs_distances(g, v);
  VertexSet out;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (du[w] >= 0 && dv[w] >= 0 && du[w] + dv[w] == du[v]) out = out.with(w);
  }
  return out;
}

/// Monophonic interval: vertices on induced u-v paths.  Endpoints must be
/// distinct and connected to each other.
inline VertexSet monophonic_interval(const Graph& g, Vertex u, Vertex v) {
  detail::check_endpoint(g, u);
  detail::check_endpoint(g, v);
  if (u == v) throw std::invalid_argument("interval endpoints must differ");
  VertexSet out;
  for_each_induced_path(g, u, v, 1, [&](const std::vector<Vertex>& p) {
    for (Vertex w : p) out = out.with(w);
  });
  if (out.empty()) {
    throw std::invalid_argument("no path between " + std::to_string(u) + " and " +
                                std::to_string(v));
  }
  return out;
}

/// Long-induced-path interval: vertices on induced u-v paths with at least
/// three edges.  May be empty (adjacent endpoints, short graphs, separated
/// endpoints); only u == v is an error.
inline VertexSet m3_interval(const Graph& g, Vertex u, Vertex v) {
  detail::check_endpoint(g, u);
  detail::check_endpoint(g, v);
  if (u == v) throw std::invalid_argument("interval endpoints must differ");
  VertexSet out;
  for_each_induced_path(g, u, v, 3, [&](const std::vector<Vertex>& p) {
    for (Vertex w : p) out = out.with(w);
  });
  return out;
}

/// Union of m3_interval over all unordered pairs from s.  Note that members
/// of s are not automatically included: pairs with no long induced path
/// contribute nothing.
inline VertexSet m3_interval_set(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw std::invalid_argument("vertex set mentions vertices outside the graph");
  }
  VertexSet out;
  for (Vertex u : s)
    for (Vertex v : s)
      if (u < v) out |= m3_interval(g, u, v);
  return out;
}

/// Visits every W with U ⊆ W ⊆ V such that ⟨W⟩ is connected and every
/// vertex of W ∖ U is a cut vertex of ⟨W⟩ (the defining property of a
/// minimal U-tree's vertex set).  Ascending mask order.
template <typename Visitor>
void for_each_minimal_tree(const Graph& g, VertexSet terminals, Visitor&& visit) {
  if (terminals.count() < 2) {
    throw std::invalid_argument("minimal trees need at least two terminals");
  }
  if (!terminals.subset_of(g.vertices())) {
    throw std::invalid_argument("vertex set mentions vertices outside the graph");
  }
  std::vector<Vertex> extra = (g.vertices() - terminals).to_vector();
  std::uint32_t limit = std::uint32_t{1} << extra.size();
  for (std::uint32_t choice = 0; choice < limit; ++choice) {
    VertexSet w = terminals;
    for (std::size_t i = 0; i < extra.size(); ++i) {
      if ((choice >> i) & 1u) w = w.with(extra[i]);
    }
    if (!is_connected_set(g, w)) continue;
    bool all_cut = true;
    for (Vertex x : w - terminals) {
      if (!is_cut_vertex_within(g, w, x)) {
        all_cut = false;
        break;
      }
    }
    if (all_cut) visit(w);
  }
}

inline std::vector<VertexSet> minimal_tree_vertex_sets(const Graph& g, VertexSet terminals) {
  std::vector<VertexSet> out;
  for_each_minimal_tree(g, terminals, [&](VertexSet w) { out.push_back(w); });
  return out;
}

namespace detail {

/// Union of minimal-tree vertex sets without the same-component
/// requirement: terminals meeting several components just yield nothing.
inline VertexSet monophonic_tuple_union(const Graph& g, VertexSet terminals) {
  VertexSet out;
  for_each_minimal_tree(g, terminals, [&](VertexSet w) { out |= w; });
  return out;
}

inline bool same_component(const Graph& g, VertexSet s) {
  if (s.empty()) return true;
  return s.subset_of(component_of(g, s.min()));
}

/// Union of the minimum-size connected supersets of s; empty when the
/// terminals meet several components.  No argument checks.
inline VertexSet steiner_union(const Graph& g, VertexSet s) {
  if (!same_component(g, s)) return VertexSet::empty_set();
  std::vector<Vertex> extra = (g.vertices() - s).to_vector();
  std::uint32_t limit = std::uint32_t{1} << extra.size();
  std::vector<std::vector<VertexSet>> by_size(extra.size() + 1);
  for (std::uint32_t choice = 0; choice < limit; ++choice) {
    VertexSet w = s;
    int added = 0;
    for (std::size_t i = 0; i < extra.size(); ++i) {
      if ((choice >> i) & 1u) {
        w = w.with(extra[i]);
        ++added;
      }
    }
    by_size[added].push_back(w);
  }
  for (const std::vector<VertexSet>& layer : by_size) {
    VertexSet out;
    bool any = false;
    for (VertexSet w : layer) {
      if (is_connected_set(g, w)) {
        out |= w;
        any = true;
      }
    }
    if (any) return out;
  }
  return VertexSet::empty_set();
}

}  // namespace detail

/// Monophonic interval of a vertex set: union of the minimal-tree vertex
/// sets over U.  Errors when U has fewer than two members or meets two
/// components.
inline VertexSet monophonic_interval_set(const Graph& g, VertexSet terminals) {
  if (terminals.count() < 2) {
    throw std::invalid_argument("interval needs at least two terminals");
  }
  if (!terminals.subset_of(g.vertices())) {
    throw std::invalid_argument("vertex set mentions vertices outside the graph");
  }
  if (!detail::same_component(g, terminals)) {
    throw std::invalid_argument("terminals in different components");
  }
  return detail::monophonic_tuple_union(g, terminals);
}

/// Union of monophonic_interval_set over all 3-subsets of s; empty when s
/// has fewer than three members.  3-subsets meeting several components
/// contribute nothing (no connecting tree exists).
inline VertexSet m3_lower_interval(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw std::invalid_argument("vertex set mentions vertices outside the graph");
  }
  VertexSet out;
  std::vector<Vertex> members = s.to_vector();
  int m = static_cast<int>(members.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        out |= detail::monophonic_tuple_union(
            g, VertexSet::of({members[a], members[b], members[c]}));
      }
  return out;
}

/// Steiner interval: union of all minimum-size connected vertex sets
/// containing s.  Errors when s has fewer than two members or meets two
/// components.
inline VertexSet steiner_interval(const Graph& g, VertexSet s) {
  if (s.count() < 2) throw std::invalid_argument("interval needs at least two terminals");
  if (!s.subset_of(g.vertices())) {
    throw std::invalid_argument("vertex set mentions vertices outside the graph");
  }
  if (!detail::same_component(g, s)) {
    throw std::invalid_argument("terminals in different components");
  }
  return detail::steiner_union(g, s);
}

}  // namespace gcx
