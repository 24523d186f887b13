#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "gcx/graph.hpp"
#include "helpers.hpp"

using gcx::Graph;
using gcx::Vertex;
using gcx::VertexSet;

TEST_CASE("vertex sets behave like small ordered sets", "[graph]") {
  VertexSet s = VertexSet::of({4, 1, 9});
  CHECK(s.count() == 3);
  CHECK(s.contains(1));
  CHECK(s.contains(4));
  CHECK(s.contains(9));
  CHECK_FALSE(s.contains(0));
  CHECK_FALSE(s.empty());
  CHECK(VertexSet::empty_set().empty());
  CHECK(VertexSet::full(5).count() == 5);
  CHECK(VertexSet::single(3) == VertexSet::of({3}));

  SECTION("iteration is ascending") {
    std::vector<Vertex> seen;
    for (Vertex v : s) seen.push_back(v);
    CHECK(seen == std::vector<Vertex>{1, 4, 9});
    CHECK(s.to_vector() == std::vector<Vertex>{1, 4, 9});
    CHECK(s.min() == 1);
  }

  SECTION("with and without") {
    CHECK(s.with(2).count() == 4);
    CHECK(s.with(4) == s);
    CHECK(s.without(4) == VertexSet::of({1, 9}));
    CHECK(s.without(7) == s);
  }

  SECTION("set algebra") {
    VertexSet t = VertexSet::of({1, 2});
    CHECK((s | t) == VertexSet::of({1, 2, 4, 9}));
    CHECK((s & t) == VertexSet::single(1));
    CHECK((s - t) == VertexSet::of({4, 9}));
    CHECK(t.subset_of(s | t));
    CHECK_FALSE(t.subset_of(s));
    CHECK(VertexSet::empty_set().subset_of(t));
  }
}

TEST_CASE("graph construction validates its arguments", "[graph]") {
  CHECK(Graph(0).order() == 0);
  CHECK(Graph(5).edge_count() == 0);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  CHECK_THROWS_WITH(Graph(-1), "graph order must be non-negative");
  CHECK_THROWS_AS(Graph(17), gcx::capacity_error);
  CHECK_THROWS_WITH(Graph(17), "graph order 17 exceeds cap 16");
  CHECK_NOTHROW(Graph(gcx::kMaxVertices));

  CHECK_THROWS_WITH(Graph(3).with_edge(1, 1), "edge (1, 1) is a loop");
  CHECK_THROWS_WITH(Graph(3).with_edge(0, 3), "edge (0, 3) out of range for order 3");
  CHECK_THROWS_WITH(Graph(3).with_edge(-1, 2), "edge (-1, 2) out of range for order 3");
}

TEST_CASE("graphs expose adjacency symmetrically", "[graph]") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.neighbors(1) == VertexSet::of({0, 2}));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.vertices() == VertexSet::full(4));

  SECTION("edges are listed ascending with u < v") {
    Graph h = Graph::from_edges(4, {{2, 3}, {1, 0}, {2, 1}});
    std::vector<std::pair<Vertex, Vertex>> expected{{0, 1}, {1, 2}, {2, 3}};
    CHECK(h.edges() == expected);
  }

  SECTION("equality is structural") {
    CHECK(g == testutil::path_graph(4));
    CHECK_FALSE(g == testutil::cycle_graph(4));
  }
}

TEST_CASE("with_vertex appends a fresh vertex", "[graph]") {
  Graph p2 = testutil::path_graph(2);
  Graph g = p2.with_vertex(VertexSet::single(1));
  CHECK(g == testutil::path_graph(3));
  CHECK_THROWS_WITH(p2.with_vertex(VertexSet::single(2)),
                    "new-vertex neighborhood mentions unknown vertices");
}

TEST_CASE("relabeled permutes adjacency", "[graph]") {
  Graph p3 = testutil::path_graph(3);
  Graph swapped = p3.relabeled({2, 1, 0});
  CHECK(swapped == p3);
  Graph moved = p3.relabeled({1, 0, 2});  // centre moves to 0
  CHECK(moved.adjacent(0, 1));
  CHECK(moved.adjacent(0, 2));
  CHECK_FALSE(moved.adjacent(1, 2));

  CHECK_THROWS_WITH(p3.relabeled({0, 1}), "permutation size does not match graph order");
  CHECK_THROWS_WITH(p3.relabeled({0, 1, 1}), "not a permutation");
  CHECK_THROWS_WITH(p3.relabeled({0, 1, 3}), "not a permutation");
}

TEST_CASE("induced subgraphs compact labels in ascending order", "[graph]") {
  Graph a = testutil::a_graph();
  gcx::InducedSubgraph sub = gcx::induced_subgraph(a, VertexSet::of({2, 3, 4, 5}));
  CHECK(sub.vertices == std::vector<Vertex>{2, 3, 4, 5});
  CHECK(sub.graph == Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));

  CHECK_THROWS_WITH(gcx::induced_subgraph(a, VertexSet::empty_set()),
                    "induced subgraph of the empty set");
  CHECK_THROWS_WITH(gcx::induced_subgraph(a, VertexSet::of({0, 6})),
                    "vertex set mentions vertices outside the graph");
}

TEST_CASE("connectivity of graphs and vertex sets", "[graph]") {
  CHECK(gcx::is_connected(Graph(0)));
  CHECK(gcx::is_connected(Graph(1)));
  CHECK_FALSE(gcx::is_connected(Graph(2)));
  CHECK(gcx::is_connected(testutil::cycle_graph(5)));
  CHECK_FALSE(gcx::is_connected(testutil::two_edges_graph()));

  Graph a = testutil::a_graph();
  CHECK(gcx::is_connected_set(a, VertexSet::of({0, 2, 5})));
  CHECK_FALSE(gcx::is_connected_set(a, VertexSet::of({0, 1})));
  CHECK_FALSE(gcx::is_connected_set(a, VertexSet::empty_set()));
  CHECK(gcx::is_connected_set(a, VertexSet::single(4)));
}

TEST_CASE("components are reported by smallest member", "[graph]") {
  Graph g = testutil::two_edges_graph();
  std::vector<VertexSet> comps = gcx::components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet::of({0, 1}));
  CHECK(comps[1] == VertexSet::of({2, 3}));
  CHECK(gcx::component_of(g, 3) == VertexSet::of({2, 3}));
  CHECK(gcx::components(Graph(0)).empty());
  CHECK(gcx::components(testutil::cycle_graph(4)).size() == 1);
}

TEST_CASE("cut vertices within a set and across a graph", "[graph]") {
  Graph a = testutil::a_graph();
  CHECK(gcx::cut_vertices(a) == VertexSet::of({2, 5}));
  CHECK(gcx::cut_vertices(testutil::path_graph(3)) == VertexSet::single(1));
  CHECK(gcx::cut_vertices(testutil::cycle_graph(4)).empty());
  CHECK_THROWS_WITH(gcx::cut_vertices(testutil::two_edges_graph()),
                    "cut_vertices requires a connected graph");

  CHECK(gcx::is_cut_vertex_within(a, VertexSet::of({0, 2, 3}), 2));
  CHECK_FALSE(gcx::is_cut_vertex_within(a, VertexSet::of({2, 3, 4, 5}), 2));
  CHECK_THROWS_WITH(gcx::is_cut_vertex_within(a, VertexSet::of({0, 2}), 3),
                    "vertex not in the given set");
}

TEST_CASE("closed neighborhoods expand by one step", "[graph]") {
  Graph a = testutil::a_graph();
  CHECK(gcx::closed_neighborhood(a, VertexSet::single(2)) == VertexSet::of({0, 2, 3, 5}));
  CHECK(gcx::closed_neighborhood(a, VertexSet::of({3, 4})) == VertexSet::of({2, 3, 4, 5}));
  CHECK(gcx::closed_neighborhood(a, VertexSet::empty_set()).empty());
  CHECK_THROWS_WITH(gcx::closed_neighborhood(a, VertexSet::of({6})),
                    "vertex set mentions vertices outside the graph");
}

TEST_CASE("breadth-first distances mark unreachable vertices", "[graph]") {
  std::vector<int> dist = gcx::bfs_distances(testutil::path_graph(4), 0);
  CHECK(dist == std::vector<int>{0, 1, 2, 3});
  std::vector<int> split = gcx::bfs_distances(testutil::two_edges_graph(), 0);
  CHECK(split == std::vector<int>{0, 1, -1, -1});
  CHECK_THROWS_WITH(gcx::bfs_distances(Graph(2), 5), "vertex 5 out of range for order 2");
}

TEST_CASE("vertex bounds are checked on queries", "[graph]") {
  Graph g = testutil::path_graph(3);
  CHECK_THROWS_WITH(g.neighbors(3), "vertex 3 out of range for order 3");
  CHECK_THROWS_WITH(g.adjacent(0, -1), "vertex -1 out of range for order 3");
}
