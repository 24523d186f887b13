#pragma once

// Convexity spaces over small graphs.  A convexity kind selects which vertex
// tuples generate demands (intervals that a convex set must absorb); on top of
// that sit the usual notions: convex sets, hulls, extreme points, and the
// Minkowski-Krein-Milman test for being a convex geometry.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/intervals.hpp"

namespace gcx {

/// Largest order for which a full convex-set family is materialised.
inline constexpr int kAlignmentCap = 12;

enum class KindTag {
  Geodesic,
  Monophonic,
  MonophonicK,
  M3Path,
  M33,
  SteinerK,
};

/// A choice of interval demand.  Pair-based kinds close under two-point
/// intervals; tuple kinds (MonophonicK, SteinerK) close under k-point
/// intervals; M33 combines the m3 pair demand with the monophonic 3-tuple
/// demand.
struct ConvexityKind {
  KindTag tag = KindTag::Geodesic;
  int k = 0;  // tuple size for MonophonicK / SteinerK, 0 for pair kinds

  static ConvexityKind geodesic() { return {KindTag::Geodesic, 0}; }
  static ConvexityKind monophonic() { return {KindTag::Monophonic, 0}; }
  static ConvexityKind m3_path() { return {KindTag::M3Path, 0}; }
  static ConvexityKind m33() { return {KindTag::M33, 0}; }

  static ConvexityKind monophonic_k(int k) {
    check_tuple_size(k);
    return {KindTag::MonophonicK, k};
  }

  static ConvexityKind steiner_k(int k) {
    check_tuple_size(k);
    return {KindTag::SteinerK, k};
  }

  std::string name() const {
    switch (tag) {
      case KindTag::Geodesic:
        return "geodesic";
      case KindTag::Monophonic:
        return "monophonic";
      case KindTag::MonophonicK:
        return "monophonic-" + std::to_string(k);
      case KindTag::M3Path:
        return "m3-path";
      case KindTag::M33:
        return "m33";
      case KindTag::SteinerK:
        return "steiner-" + std::to_string(k);
    }
    return "unknown";
  }

  friend bool operator==(const ConvexityKind&, const ConvexityKind&) = default;

  static void check_tuple_size(int k) {
    if (k < 2) throw std::invalid_argument("tuple size must be at least 2");
  }
};

namespace detail {

/// Visits every k-subset of base in ascending lexicographic member order.
/// The visitor returns false to stop early; the function reports whether the
/// walk ran to completion.
template <typename Visitor>
bool for_each_subset_of_size(VertexSet base, int k, Visitor&& visit) {
  std::vector<Vertex> members = base.to_vector();
  int n = static_cast<int>(members.size());
  if (k > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexSet subset;
    for (int i : idx) subset = subset.with(members[static_cast<std::size_t>(i)]);
    if (!visit(subset)) return false;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace detail

/// Precomputed interval lookups for one graph.  Pair intervals are tabulated
/// eagerly; tuple intervals are memoised on demand.  Tuples whose terminals
/// straddle components contribute the empty set, so the convexity machinery
/// works uniformly on disconnected graphs.  Instances are not thread-safe:
/// the tuple memos mutate under const access.
class IntervalOracle {
 public:
  explicit IntervalOracle(Graph g) : g_(std::move(g)) {
    int n = g_.order();
    geodesic_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                     VertexSet::empty_set());
    monophonic_ = geodesic_;
    m3_ = geodesic_;
    for (Vertex u = 0; u < n; ++u) {
      std::vector<int> du = bfs_distances(g_, u);
      for (Vertex v = u + 1; v < n; ++v) {
        if (du[static_cast<std::size_t>(v)] < 0) continue;  // pairs across components stay empty
        put(geodesic_, u, v, geodesic_interval(g_, u, v));
        put(monophonic_, u, v, monophonic_interval(g_, u, v));
        put(m3_, u, v, m3_interval(g_, u, v));
      }
    }
  }

  const Graph& graph() const { return g_; }

  /// Geodesic pair interval; empty when u and v lie in different components.
  VertexSet geodesic_pair(Vertex u, Vertex v) const { return get(geodesic_, u, v); }

  /// Monophonic pair interval; empty across components.
  VertexSet monophonic_pair(Vertex u, Vertex v) const { return get(monophonic_, u, v); }

  /// Union of induced u-v paths with at least three edges; empty when none.
  VertexSet m3_pair(Vertex u, Vertex v) const { return get(m3_, u, v); }

  /// Union of monophonic intervals over the terminal set (vertices whose
  /// every member is a demanded point), empty-per-component convention.
  VertexSet monophonic_tuple(VertexSet terminals) const {
    auto it = monophonic_tuples_.find(terminals.mask());
    if (it != monophonic_tuples_.end()) return it->second;
    VertexSet out = detail::same_component(g_, terminals)
                        ? detail::monophonic_tuple_union(g_, terminals)
                        : VertexSet::empty_set();
    monophonic_tuples_.emplace(terminals.mask(), out);
    return out;
  }

  /// Union of minimum-size connected supersets; empty across components.
  VertexSet steiner_tuple(VertexSet terminals) const {
    auto it = steiner_tuples_.find(terminals.mask());
    if (it != steiner_tuples_.end()) return it->second;
    VertexSet out = detail::steiner_union(g_, terminals);
    steiner_tuples_.emplace(terminals.mask(), out);
    return out;
  }

 private:
  static std::size_t slot(Vertex u, Vertex v, int n) {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(v);
  }

  void put(std::vector<VertexSet>& table, Vertex u, Vertex v, VertexSet value) {
    table[slot(u, v, g_.order())] = value;
  }

  VertexSet get(const std::vector<VertexSet>& table, Vertex u, Vertex v) const {
    if (u == v) return VertexSet::single(u);
    return table[slot(u, v, g_.order())];
  }

  Graph g_;
  std::vector<VertexSet> geodesic_;
  std::vector<VertexSet> monophonic_;
  std::vector<VertexSet> m3_;
  mutable std::map<std::uint32_t, VertexSet> monophonic_tuples_;
  mutable std::map<std::uint32_t, VertexSet> steiner_tuples_;
};

namespace detail {

inline void check_subset(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw std::invalid_argument("vertex set mentions vertices outside the graph");
  }
}

/// Runs the visitor over every interval the kind demands of the set x.
/// The visitor returns false to stop early; the return value reports whether
/// every demand was visited.
template <typename Visitor>
bool for_each_demand(const IntervalOracle& oracle, ConvexityKind kind,
                     VertexSet x, Visitor&& visit) {
  switch (kind.tag) {
    case KindTag::Geodesic:
      return for_each_subset_of_size(x, 2, [&](VertexSet pair) {
        Vertex u = pair.min();
        Vertex v = pair.without(u).min();
        return visit(oracle.geodesic_pair(u, v));
      });
    case KindTag::Monophonic:
      return for_each_subset_of_size(x, 2, [&](VertexSet pair) {
        Vertex u = pair.min();
        Vertex v = pair.without(u).min();
        return visit(oracle.monophonic_pair(u, v));
      });
    case KindTag::M3Path:
      return for_each_subset_of_size(x, 2, [&](VertexSet pair) {
        Vertex u = pair.min();
        Vertex v = pair.without(u).min();
        return visit(oracle.m3_pair(u, v));
      });
    case KindTag::MonophonicK:
      return for_each_subset_of_size(x, kind.k, [&](VertexSet tuple) {
        return visit(oracle.monophonic_tuple(tuple));
      });
    case KindTag::M33:
      if (!for_each_demand(oracle, ConvexityKind::m3_path(), x, visit)) return false;
      return for_each_subset_of_size(x, 3, [&](VertexSet tuple) {
        return visit(oracle.monophonic_tuple(tuple));
      });
    case KindTag::SteinerK:
      return for_each_subset_of_size(x, kind.k, [&](VertexSet tuple) {
        return visit(oracle.steiner_tuple(tuple));
      });
  }
  return true;
}

inline VertexSet expand_once(const IntervalOracle& oracle, ConvexityKind kind,
                             VertexSet x) {
  VertexSet out = x;
  for_each_demand(oracle, kind, x, [&](VertexSet interval) {
    out |= interval;
    return true;
  });
  return out;
}

}  // namespace detail

/// True when every demanded interval over s stays inside s.
inline bool is_convex(const IntervalOracle& oracle, ConvexityKind kind,
                      VertexSet s) {
  detail::check_subset(oracle.graph(), s);
  return detail::for_each_demand(oracle, kind, s, [&](VertexSet interval) {
    return interval.subset_of(s);
  });
}

/// Smallest convex superset of s: closes under demands round by round.
inline VertexSet hull(const IntervalOracle& oracle, ConvexityKind kind,
                      VertexSet s) {
  detail::check_subset(oracle.graph(), s);
  VertexSet x = s;
  while (true) {
    VertexSet next = detail::expand_once(oracle, kind, x);
    if (next == x) return x;
    x = next;
  }
}

/// All convex sets, in ascending bitmask order.  Exponential in the order,
/// hence refused above kAlignmentCap vertices.
inline std::vector<VertexSet> convex_sets(const IntervalOracle& oracle,
                                          ConvexityKind kind) {
  int n = oracle.graph().order();
  if (n > kAlignmentCap) {
    throw capacity_error("convex-set families are limited to " +
                         std::to_string(kAlignmentCap) + " vertices, got " +
                         std::to_string(n));
  }
  std::vector<VertexSet> out;
  std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    VertexSet s(mask);
    if (is_convex(oracle, kind, s)) out.push_back(s);
  }
  return out;
}

/// Members x of the convex set s with s minus x still convex.
inline VertexSet extreme_points(const IntervalOracle& oracle,
                                ConvexityKind kind, VertexSet s) {
  detail::check_subset(oracle.graph(), s);
  if (!is_convex(oracle, kind, s)) {
    throw std::invalid_argument("extreme points are defined on convex sets; the set is not convex");
  }
  VertexSet out;
  for (Vertex x : s) {
    if (is_convex(oracle, kind, s.without(x))) out = out.with(x);
  }
  return out;
}

/// A convex set that is not the hull of its extreme points, with both sides
/// of the failed identity.
struct GeometryWitness {
  VertexSet convex_set;
  VertexSet extreme;
  VertexSet hull;
};

struct GeometryResult {
  bool ok = false;
  std::optional<GeometryWitness> witness;
};

/// Minkowski-Krein-Milman test: every convex set must equal the hull of its
/// extreme points.  On failure the witness is the first offender in
/// ascending bitmask order.
inline GeometryResult is_convex_geometry(const IntervalOracle& oracle,
                                         ConvexityKind kind) {
  for (VertexSet c : convex_sets(oracle, kind)) {
    VertexSet ex = extreme_points(oracle, kind, c);
    VertexSet h = hull(oracle, kind, ex);
    if (h != c) return {false, GeometryWitness{c, ex, h}};
  }
  return {true, std::nullopt};
}

// Graph-level conveniences; each builds a throwaway oracle.

inline bool is_convex(const Graph& g, ConvexityKind kind, VertexSet s) {
  return is_convex(IntervalOracle(g), kind, s);
}

inline VertexSet hull(const Graph& g, ConvexityKind kind, VertexSet s) {
  return hull(IntervalOracle(g), kind, s);
}

inline std::vector<VertexSet> convex_sets(const Graph& g, ConvexityKind kind) {
  return convex_sets(IntervalOracle(g), kind);
}

inline VertexSet extreme_points(const Graph& g, ConvexityKind kind, VertexSet s) {
  return extreme_points(IntervalOracle(g), kind, s);
}

inline GeometryResult is_convex_geometry(const Graph& g, ConvexityKind kind) {
  return is_convex_geometry(IntervalOracle(g), kind);
}

/// One graph, one kind, shared oracle, lazily materialised convex family.
/// Not thread-safe per instance (shares the oracle's memo caveat).
class Alignment {
 public:
  Alignment(Graph g, ConvexityKind kind)
      : kind_(kind), oracle_(std::move(g)) {}

  const Graph& graph() const { return oracle_.graph(); }
  ConvexityKind kind() const { return kind_; }
  const IntervalOracle& oracle() const { return oracle_; }

  bool is_convex(VertexSet s) const { return gcx::is_convex(oracle_, kind_, s); }
  VertexSet hull(VertexSet s) const { return gcx::hull(oracle_, kind_, s); }
  VertexSet extreme_points(VertexSet s) const {
    return gcx::extreme_points(oracle_, kind_, s);
  }
  GeometryResult is_convex_geometry() const {
    return gcx::is_convex_geometry(oracle_, kind_);
  }

  const std::vector<VertexSet>& convex_sets() const {
    std::call_once(family_once_, [this] { family_ = gcx::convex_sets(oracle_, kind_); });
    return family_;
  }

 private:
  ConvexityKind kind_;
  IntervalOracle oracle_;
  mutable std::once_flag family_once_;
  mutable std::vector<VertexSet> family_;
};

// Local characterisations of a vertex inside the subgraph induced by s.

namespace detail {

inline void check_member(const Graph& g, VertexSet s, Vertex v) {
  check_subset(g, s);
  if (!s.contains(v)) throw std::invalid_argument("vertex is not in the given set");
}

}  // namespace detail

/// Neighbours of v within s are pairwise adjacent.
inline bool is_simplicial(const Graph& g, VertexSet s, Vertex v) {
  detail::check_member(g, s, v);
  VertexSet nv = g.neighbors(v) & s;
  for (Vertex a : nv) {
    for (Vertex b : nv.without(a)) {
      if (b > a && !g.adjacent(a, b)) return false;
    }
  }
  return true;
}

/// v is not an internal vertex of any induced four-vertex path in the
/// subgraph induced by s.
inline bool is_semisimplicial(const Graph& g, VertexSet s, Vertex v) {
  detail::check_member(g, s, v);
  VertexSet nv = g.neighbors(v) & s;
  for (Vertex a : nv) {
    // c completes a-v-c with a,c nonadjacent; d extends to an induced path.
    for (Vertex c : nv - closed_neighborhood(g, VertexSet::single(a))) {
      VertexSet tails = (g.neighbors(c) & s) -
                        closed_neighborhood(g, VertexSet::single(v)) -
                        closed_neighborhood(g, VertexSet::single(a));
      if (!tails.empty()) return false;
    }
  }
  return true;
}

/// v is semisimplicial and not the centre of an induced claw or paw in the
/// subgraph induced by s (no three neighbours span at most one edge).
inline bool is_three_steiner_simplicial(const Graph& g, VertexSet s, Vertex v) {
  detail::check_member(g, s, v);
  VertexSet nv = g.neighbors(v) & s;
  bool no_sparse_triple =
      detail::for_each_subset_of_size(nv, 3, [&](VertexSet triple) {
        std::vector<Vertex> t = triple.to_vector();
        int edges = static_cast<int>(g.adjacent(t[0], t[1])) +
                    static_cast<int>(g.adjacent(t[0], t[2])) +
                    static_cast<int>(g.adjacent(t[1], t[2]));
        return edges > 1;
      });
  if (!no_sparse_triple) return false;
  return is_semisimplicial(g, s, v);
}

inline VertexSet simplicial_vertices(const Graph& g, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) {
    if (is_simplicial(g, s, v)) out = out.with(v);
  }
  return out;
}

inline VertexSet semisimplicial_vertices(const Graph& g, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) {
    if (is_semisimplicial(g, s, v)) out = out.with(v);
  }
  return out;
}

inline VertexSet three_steiner_simplicial_vertices(const Graph& g, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) {
    if (is_three_steiner_simplicial(g, s, v)) out = out.with(v);
  }
  return out;
}

}  // namespace gcx
