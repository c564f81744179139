#include <doctest.h>

#include "apexis/graph.hpp"
#include "apexis/graph6.hpp"
#include "apexis/multigraph.hpp"

using namespace apexis;

TEST_CASE("named graphs have the expected sizes") {
  CHECK(complete(7).edge_count() == 21);
  CHECK(complete_bipartite(3, 3).edge_count() == 9);
  CHECK(petersen().edge_count() == 15);
  CHECK(petersen().min_degree() == 3);
  CHECK(cycle(5).degree_sequence() == std::vector<int>(5, 2));
  CHECK(path(3).order() == 4);
  CHECK(star(4).max_degree() == 4);
  CHECK_THROWS_AS(cycle(2), SizeError);
  CHECK_THROWS_AS(Graph(33), SizeError);
}

TEST_CASE("edges are listed lexicographically") {
  Graph g(4);
  g.add_edge(2, 1);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
  CHECK_THROWS_AS(g.add_edge(1, 1), PreconditionError);
}

TEST_CASE("complement and join") {
  CHECK(complement(complete(5)).edge_count() == 0);
  const Graph j = join(empty_graph(1), cycle(4));
  CHECK(j.order() == 5);
  CHECK(j.edge_count() == 8);
  CHECK(disjoint_union(complete(3), complete(3)).components().size() == 2);
}

TEST_CASE("vertex deletion keeps an index map") {
  const Deletion d = delete_vertices(complete(5), VertexSet{1, 3});
  CHECK(d.graph == complete(3));
  CHECK(d.original == std::vector<int>{0, 2, 4});
  CHECK_THROWS_AS(delete_vertices(complete(3), VertexSet{5}), DomainError);
}

TEST_CASE("reduction smooths and deletes until min degree three") {
  // K4 with one edge subdivided twice and a pendant path attached.
  Graph g(8);
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}, {4, 5}, {5, 3}, {3, 6}, {6, 7}}) {
    g.add_edge(u, v);
  }
  const Reduction r = reduce(g);
  CHECK(r.graph.order() == 4);
  CHECK(r.graph.edge_count() == 6);
  const Reduction again = replay(g, r.trace);
  CHECK(again.graph == r.graph);
  CHECK(again.original == r.original);
  CHECK(reduce(cycle(6)).graph.order() == 0);
}

TEST_CASE("smoothing drops a parallel copy") {
  Graph g = complete(3);
  const Graph s = smooth_simplify(g, 2);
  CHECK(s.order() == 2);
  CHECK(s.edge_count() == 1);
  CHECK_THROWS_AS(smooth_simplify(complete(4), 0), PreconditionError);
}

TEST_CASE("triangle-Y and Y-triangle are inverse on K4") {
  const Graph y = triangle_y(complete(4), 0, 1, 2);
  CHECK(y.order() == 5);
  CHECK(y.edge_count() == 6);
  CHECK(y.degree(4) == 3);
  CHECK(y_triangle(y, 4) == complete(4));
  CHECK(triangles(complete(4)).size() == 4);
}

TEST_CASE("graph6 round trips") {
  CHECK(to_graph6(complete(4)) == "C~");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(from_graph6(">>graph6<<C~\n") == complete(4));
  const Graph p = petersen();
  CHECK(from_graph6(to_graph6(p)) == p);
  for (int n = 0; n <= 32; ++n) {
    Graph g(n);
    for (int v = 1; v < n; v += 2) g.add_edge(v - 1, v);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  CHECK_THROWS_AS(from_graph6("C"), ParseError);
  CHECK_THROWS_AS(from_graph6("C\x7f"), ParseError);
}

TEST_CASE("multigraph simplification of a theta") {
  // Two poles joined by three paths of length two.
  Graph g(5);
  for (int m : {2, 3, 4}) {
    g.add_edge(0, m);
    g.add_edge(1, m);
  }
  const MultigraphSimplification s = multigraph_simplify(Multigraph::from_graph(g));
  CHECK(s.result.order() == 2);
  CHECK(s.result.edge_count() == 3);
  CHECK(s.result.loop_count() == 0);
}
