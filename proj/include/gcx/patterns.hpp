#pragma once

// Small named subgraph patterns and the searches built on them: induced
// embeddings, chordless cycles, chordality, and freeness predicates.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcx/convexity.hpp"
#include "gcx/graph.hpp"

namespace gcx {

/// A family of graphs on a fixed vertex range: a required edge set plus a
/// run of optional edges.  Member i keeps optional edge j exactly when bit j
/// of i is set, so members enumerate in binary order over the optional run.
class PatternFamily {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  PatternFamily(std::string name, int order, std::vector<Edge> required,
                std::vector<Edge> optional = {})
      : name_(std::move(name)),
        order_(order),
        required_(std::move(required)),
        optional_(std::move(optional)) {
    for (const Edge& opt : optional_) {
      for (const Edge& req : required_) {
        if (same_edge(opt, req)) {
          throw std::logic_error("pattern family " + name_ +
                                 " lists an edge as both required and optional");
        }
      }
    }
    for (int i = 0; i < member_count(); ++i) {
      if (!is_connected(member(i))) {
        throw std::logic_error("pattern family " + name_ + " has a disconnected member");
      }
    }
  }

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  const std::vector<Edge>& required_edges() const { return required_; }
  const std::vector<Edge>& optional_edges() const { return optional_; }
  int member_count() const { return 1 << optional_.size(); }

  Graph member(int idx) const {
    if (idx < 0 || idx >= member_count()) {
      throw std::invalid_argument("pattern family " + name_ + " has no member " +
                                  std::to_string(idx));
    }
    Graph g(order_);
    for (const Edge& e : required_) g = g.with_edge(e.first, e.second);
    for (std::size_t j = 0; j < optional_.size(); ++j) {
      if ((idx >> j) & 1) g = g.with_edge(optional_[j].first, optional_[j].second);
    }
    return g;
  }

  std::vector<Graph> members() const {
    std::vector<Graph> out;
    for (int i = 0; i < member_count(); ++i) out.push_back(member(i));
    return out;
  }

 private:
  static bool same_edge(const Edge& a, const Edge& b) {
    return (a.first == b.first && a.second == b.second) ||
           (a.first == b.second && a.second == b.first);
  }

  std::string name_;
  int order_;
  std::vector<Edge> required_;
  std::vector<Edge> optional_;
};

inline PatternFamily path_family(int length) {
  if (length < 1) throw std::invalid_argument("paths need at least one vertex");
  std::vector<PatternFamily::Edge> edges;
  for (Vertex v = 0; v + 1 < length; ++v) edges.emplace_back(v, v + 1);
  return PatternFamily("p" + std::to_string(length), length, std::move(edges));
}

inline PatternFamily cycle_family(int length) {
  if (length < 3) throw std::invalid_argument("cycles need at least three vertices");
  std::vector<PatternFamily::Edge> edges;
  for (Vertex v = 0; v < length; ++v) edges.emplace_back(v, (v + 1) % length);
  return PatternFamily("c" + std::to_string(length), length, std::move(edges));
}

/// The fixed pattern catalog, in a stable order.  Notable entries:
///  - house: a square 0-1-2-3-0 with a roof vertex 4 adjacent to 0 and 1;
///  - domino: two squares glued along the edge 2-3;
///  - fan3: a four-vertex path plus a hub adjacent to all of it;
///  - a: a square 2-3-4-5 with pendant legs 0 at 2 and 1 at 5;
///  - rc4: complete bipartite 3+3 with one optional edge in each part;
///  - tc4: a bipartite core on {0,1} x {2,3}, with 4 hanging on 1 and 5 on
///    0, plus optional edges 2-3 and 0-4.
inline const std::vector<PatternFamily>& catalog() {
  static const std::vector<PatternFamily> families = [] {
    std::vector<PatternFamily> out;
    out.push_back(PatternFamily("claw", 4, {{0, 1}, {0, 2}, {0, 3}}));
    out.push_back(PatternFamily("paw", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}));
    out.push_back(path_family(4));
    for (int k = 4; k <= 8; ++k) out.push_back(cycle_family(k));
    out.push_back(PatternFamily(
        "house", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}}));
    out.push_back(PatternFamily(
        "domino", 6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}));
    out.push_back(PatternFamily(
        "fan3", 5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    out.push_back(PatternFamily(
        "a", 6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}, {1, 5}}));
    out.push_back(PatternFamily(
        "rc4", 6,
        {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}},
        {{0, 1}, {3, 5}}));
    out.push_back(PatternFamily(
        "tc4", 6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {0, 5}},
        {{2, 3}, {0, 4}}));
    return out;
  }();
  return families;
}

inline const PatternFamily& catalog_family(const std::string& name) {
  for (const PatternFamily& family : catalog()) {
    if (family.name() == name) return family;
  }
  throw std::invalid_argument("unknown pattern family: " + name);
}

namespace detail {

template <typename Visitor>
bool embed_descend(const Graph& g, const Graph& pattern, std::vector<Vertex>& image,
                   VertexSet used, Visitor&& visit) {
  int next = static_cast<int>(image.size());
  if (next == pattern.order()) {
    return visit(const_cast<const std::vector<Vertex>&>(image));
  }
  for (Vertex cand : g.vertices() - used) {
    if (g.degree(cand) < pattern.degree(next)) continue;
    bool consistent = true;
    for (int j = 0; j < next; ++j) {
      if (pattern.adjacent(next, j) != g.adjacent(cand, image[static_cast<std::size_t>(j)])) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    image.push_back(cand);
    bool keep_going = embed_descend(g, pattern, image, used.with(cand), visit);
    image.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace detail

/// Visits every induced embedding of the pattern into g, as the image vector
/// (pattern vertex i maps to image[i]).  The visitor returns false to stop
/// early; the function reports whether the walk ran to completion.
template <typename Visitor>
bool for_each_induced_embedding(const Graph& g, const Graph& pattern, Visitor&& visit) {
  std::vector<Vertex> image;
  return detail::embed_descend(g, pattern, image, VertexSet::empty_set(), visit);
}

inline bool contains_induced(const Graph& g, const Graph& pattern) {
  return !for_each_induced_embedding(g, pattern,
                                     [](const std::vector<Vertex>&) { return false; });
}

inline bool contains_induced_member(const Graph& g, const PatternFamily& family) {
  for (int i = 0; i < family.member_count(); ++i) {
    if (contains_induced(g, family.member(i))) return true;
  }
  return false;
}

namespace detail {

template <typename Visitor>
bool chordless_cycle_descend(const Graph& g, std::vector<Vertex>& path, VertexSet used,
                             VertexSet closed, int min_length, Visitor&& visit) {
  Vertex start = path.front();
  Vertex last = path.back();
  VertexSet near_start = g.neighbors(start);
  for (Vertex w : (g.neighbors(last) - used) - closed) {
    if (w < start) continue;  // the cycle is discovered from its smallest vertex
    if (near_start.contains(w)) {
      // w can only close the cycle: any longer continuation through w would
      // leave a chord back to the start.
      if (static_cast<int>(path.size()) + 1 >= min_length && path[1] < w) {
        path.push_back(w);
        bool keep_going = visit(const_cast<const std::vector<Vertex>&>(path));
        path.pop_back();
        if (!keep_going) return false;
      }
      continue;
    }
    path.push_back(w);
    bool keep_going = chordless_cycle_descend(g, path, used.with(w),
                                              closed | g.neighbors(last).with(last),
                                              min_length, visit);
    path.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace detail

/// Visits every chordless cycle with at least min_length vertices, as a
/// vertex sequence starting at the cycle's smallest vertex.  Each cycle is
/// produced exactly once (the second vertex is smaller than the last).  The
/// visitor returns false to stop early; the function reports whether the
/// walk ran to completion.
template <typename Visitor>
bool for_each_chordless_cycle(const Graph& g, int min_length, Visitor&& visit) {
  if (min_length < 3) throw std::invalid_argument("cycles need at least three vertices");
  for (Vertex start : g.vertices()) {
    for (Vertex second : g.neighbors(start)) {
      if (second < start) continue;
      std::vector<Vertex> path{start, second};
      if (!detail::chordless_cycle_descend(g, path, VertexSet::of({start, second}),
                                           VertexSet::empty_set(), min_length, visit)) {
        return false;
      }
    }
  }
  return true;
}

inline std::optional<std::vector<Vertex>> find_chordless_cycle(const Graph& g,
                                                               int min_length) {
  std::optional<std::vector<Vertex>> found;
  for_each_chordless_cycle(g, min_length, [&](const std::vector<Vertex>& cycle) {
    found = cycle;
    return false;
  });
  return found;
}

inline bool has_chordless_cycle(const Graph& g, int min_length) {
  return find_chordless_cycle(g, min_length).has_value();
}

/// A hole is a chordless cycle on five or more vertices.
inline bool has_hole(const Graph& g) { return has_chordless_cycle(g, 5); }

inline std::optional<std::vector<Vertex>> find_hole(const Graph& g) {
  return find_chordless_cycle(g, 5);
}

/// Chordality via simplicial elimination: repeatedly delete a vertex whose
/// remaining neighbours are pairwise adjacent.
inline bool is_chordal(const Graph& g) {
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    bool eliminated = false;
    for (Vertex v : rest) {
      if (is_simplicial(g, rest, v)) {
        rest = rest.without(v);
        eliminated = true;
        break;
      }
    }
    if (!eliminated) return false;
  }
  return true;
}

inline bool is_free_of(const Graph& g, const PatternFamily& family) {
  return !contains_induced_member(g, family);
}

/// No induced square-with-two-legs pattern.
inline bool is_a_free(const Graph& g) { return is_free_of(g, catalog_family("a")); }

/// No induced house, no hole, no induced domino.
inline bool is_hhd_free(const Graph& g) {
  return is_free_of(g, catalog_family("house")) && !has_hole(g) &&
         is_free_of(g, catalog_family("domino"));
}

inline bool is_hhda_free(const Graph& g) { return is_hhd_free(g) && is_a_free(g); }

}  // namespace gcx
