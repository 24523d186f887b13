#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcx {

/// Thrown when an input exceeds a hard size cap (vertex count, enumeration
/// level, ...).  Callers that sweep corpora catch this separately from
/// ordinary argument errors so oversized graphs can be reported as skipped
/// rather than failed.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

using Vertex = int;

/// Hard cap on graph order.  Everything in this library stores vertex sets
/// as 16-bit-ish masks inside a uint32_t, so the cap is structural.
inline constexpr int kMaxVertices = 16;

/// A set of vertices over a fixed universe of at most kMaxVertices,
/// represented as a bit mask.  Value type, cheap to copy.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t mask) : mask_(mask) {}

  static constexpr VertexSet empty_set() { return VertexSet{}; }

  static constexpr VertexSet single(Vertex v) {
    return VertexSet{std::uint32_t{1} << v};
  }

  /// All vertices 0..n-1.
  static constexpr VertexSet full(int n) {
    return VertexSet{n == 0 ? 0u : (std::uint32_t{1} << n) - 1u};
  }

  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.mask_ |= std::uint32_t{1} << v;
    return s;
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int count() const { return std::popcount(mask_); }

  constexpr bool contains(Vertex v) const {
    return (mask_ >> v) & 1u;
  }

  constexpr VertexSet with(Vertex v) const {
    return VertexSet{mask_ | (std::uint32_t{1} << v)};
  }

  constexpr VertexSet without(Vertex v) const {
    return VertexSet{mask_ & ~(std::uint32_t{1} << v)};
  }

  constexpr bool subset_of(VertexSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet{mask_ | o.mask_}; }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet{mask_ & o.mask_}; }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet{mask_ & ~o.mask_}; }
  VertexSet& operator|=(VertexSet o) { mask_ |= o.mask_; return *this; }
  VertexSet& operator&=(VertexSet o) { mask_ &= o.mask_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  /// Orders by mask value; gives containers and sorts a deterministic order.
  friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.mask_ < b.mask_; }

  /// Smallest member; undefined on the empty set.
  Vertex min() const { return std::countr_zero(mask_); }

  /// Iterates members in ascending order.
  class iterator {
   public:
    explicit iterator(std::uint32_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint32_t rest_;
  };

  iterator begin() const { return iterator{mask_}; }
  iterator end() const { return iterator{0}; }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

 private:
  std::uint32_t mask_ = 0;
};

/// Simple undirected graph without loops or multi-edges, at most
/// kMaxVertices vertices.  Immutable: "mutators" return modified copies.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int order) {
    if (order < 0) throw std::invalid_argument("graph order must be non-negative");
    if (order > kMaxVertices) {
      throw capacity_error("graph order " + std::to_string(order) + " exceeds cap " +
                           std::to_string(kMaxVertices));
    }
    n_ = order;
  }

  static Graph from_edges(int order, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) g = g.with_edge(u, v);
    return g;
  }

  int order() const { return n_; }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].count();
    return twice / 2;
  }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].contains(v);
  }

  VertexSet neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(Vertex v) const { return neighbors(v).count(); }

  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Edges as (u, v) pairs with u < v, ascending.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    if (u == v) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") is a loop");
    }
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for order " + std::to_string(n_));
    }
    Graph g = *this;
    g.adj_[u] = g.adj_[u].with(v);
    g.adj_[v] = g.adj_[v].with(u);
    return g;
  }

  /// Appends one vertex adjacent to exactly `neighborhood`.
  Graph with_vertex(VertexSet neighborhood) const {
    if (!neighborhood.subset_of(vertices())) {
      throw std::invalid_argument("new-vertex neighborhood mentions unknown vertices");
    }
    Graph g(n_ + 1);
    g.adj_ = adj_;
    g.adj_[n_] = neighborhood;
    for (Vertex v : neighborhood) g.adj_[v] = g.adj_[v].with(n_);
    return g;
  }

  /// Relabels with `perm`, a permutation of 0..n-1 mapping old id -> new id.
  Graph relabeled(const std::vector<Vertex>& perm) const {
    if (static_cast<int>(perm.size()) != n_) {
      throw std::invalid_argument("permutation size does not match graph order");
    }
    std::vector<bool> seen(n_, false);
    for (Vertex p : perm) {
      if (p < 0 || p >= n_ || seen[p]) throw std::invalid_argument("not a permutation");
      seen[p] = true;
    }
    Graph g(n_);
    for (auto [u, v] : edges()) g = g.with_edge(perm[u], perm[v]);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                  std::to_string(n_));
    }
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// The subgraph induced by a vertex set, together with the map back:
/// vertices[i] is the original id of new vertex i (ascending original order).
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> vertices;
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("induced subgraph of the empty set");
  if (!s.subset_of(g.vertices())) {
    throw std::invalid_argument("vertex set mentions vertices outside the graph");
  }
  InducedSubgraph out;
  out.vertices = s.to_vector();
  std::array<int, kMaxVertices> new_id{};
  for (int i = 0; i < static_cast<int>(out.vertices.size()); ++i) new_id[out.vertices[i]] = i;
  out.graph = Graph(static_cast<int>(out.vertices.size()));
  for (Vertex u : s)
    for (Vertex v : g.neighbors(u) & s)
      if (u < v) out.graph = out.graph.with_edge(new_id[u], new_id[v]);
  return out;
}

/// True when `s` is non-empty and the subgraph it induces is connected.
/// The empty set is not connected by convention.
inline bool is_connected_set(const Graph& g, VertexSet s) {
  if (s.empty()) return false;
  if (!s.subset_of(g.vertices())) {
    throw std::invalid_argument("vertex set mentions vertices outside the graph");
  }
  VertexSet reached = VertexSet::single(s.min());
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v) & s;
    next = next - reached;
    reached |= next;
    frontier = next;
  }
  return reached == s;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return is_connected_set(g, g.vertices());
}

/// Connected components, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.min());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next = next - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

/// The component containing v.
inline VertexSet component_of(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(g.order()));
  }
  for (const VertexSet& comp : components(g))
    if (comp.contains(v)) return comp;
  return VertexSet::empty_set();  // unreachable
}

/// True when v lies in `s` and removing it disconnects the subgraph induced
/// by `s` (a singleton or the removal leaving nothing never disconnects).
inline bool is_cut_vertex_within(const Graph& g, VertexSet s, Vertex v) {
  if (!s.contains(v)) throw std::invalid_argument("vertex not in the given set");
  VertexSet rest = s.without(v);
  return !rest.empty() && !is_connected_set(g, rest);
}

/// Cut vertices of a connected graph.  Errors on disconnected input.
inline VertexSet cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("cut_vertices requires a connected graph");
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_cut_vertex_within(g, g.vertices(), v)) out = out.with(v);
  return out;
}

/// N[s]: s together with every neighbor of a member.
inline VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw std::invalid_argument("vertex set mentions vertices outside the graph");
  }
  VertexSet out = s;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

/// BFS distances from `source`; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.order()) {
    throw std::invalid_argument("vertex " + std::to_string(source) + " out of range for order " +
                                std::to_string(g.order()));
  }
  std::vector<int> dist(g.order(), -1);
  dist[source] = 0;
  VertexSet frontier = VertexSet::single(source);
  VertexSet seen = frontier;
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = next - seen;
    for (Vertex v : next) dist[v] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

}  // namespace gcx
