#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apexis/error.hpp"
#include "apexis/vertex_set.hpp"

namespace apexis {

using Edge = std::pair<int, int>;

/// Simple undirected graph on at most 32 vertices.
///
/// Neighbourhoods are stored as bit rows, so set operations on vertex
/// neighbourhoods are single word operations. Edge count is cached.
class Graph {
 public:
  using Rows = std::array<std::uint32_t, kMaxVertices>;

  Graph() = default;
  explicit Graph(int order);
  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_rows(int order, const Rows& rows);

  int order() const { return order_; }
  int edge_count() const { return edge_count_; }
  // |G| - ||G||
  int euler_characteristic() const { return order_ - edge_count_; }

  VertexSet vertices() const { return VertexSet::range(order_); }
  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  int degree(int v) const { return neighbors(v).size(); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
  const Rows& rows() const { return rows_; }

  int min_degree() const;
  int max_degree() const;
  /// Degrees in non-increasing order.
  std::vector<int> degree_sequence() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  /// Union of neighbourhoods of s, s itself included when adjacent internally.
  VertexSet neighbors(VertexSet s) const;
  int edges_within(VertexSet s) const;
  bool connected() const;
  std::vector<VertexSet> components() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph& other) const;

  std::string to_string() const;

 private:
  void check_vertex(int v) const;

  int order_ = 0;
  int edge_count_ = 0;
  Rows rows_{};
};

/// Result of deleting vertices: the induced subgraph plus the map from
/// new vertex index to original index.
struct Deletion {
  Graph graph;
  std::vector<int> original;
};

// Named constructors. path(n) and star(n) take an edge count.
Graph complete(int n);
Graph complete_bipartite(int m, int n);
Graph cycle(int n);
Graph path(int edges);
Graph star(int edges);
Graph empty_graph(int n);
Graph petersen();

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
Deletion delete_vertices(const Graph& g, VertexSet s);
Graph induced_subgraph(const Graph& g, VertexSet keep);
/// Applies a relabeling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Remove degree-2 vertex c and join its neighbours (dropping a parallel copy).
Graph smooth_simplify(const Graph& g, int c);

struct ReductionStep {
  enum class Kind { kDeleteIsolated, kDeleteLeaf, kSmooth };
  Kind kind;
  int vertex;       // index in the original graph
  int d = -1;       // smoothing neighbours, original indices
  int e = -1;
  bool simplified = false;  // de was already an edge
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct Reduction {
  Graph graph;
  ReductionTrace trace;
  std::vector<int> original;  // reduced index -> original index
};

/// Deletes degree 0/1 vertices and smooth-simplifies degree 2 vertices until
/// the minimum degree is at least three or the graph is empty.
Reduction reduce(const Graph& g);
/// Replays a trace on g; returns the reduced graph and index map.
Reduction replay(const Graph& g, const ReductionTrace& trace);

Graph triangle_y(const Graph& g, int a, int b, int c);
Graph y_triangle(const Graph& g, int v);
/// All triangles (a < b < c).
std::vector<std::array<int, 3>> triangles(const Graph& g);

}  // namespace apexis
