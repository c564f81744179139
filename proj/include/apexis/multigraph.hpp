#pragma once

#include <array>
#include <vector>

#include "apexis/graph.hpp"

namespace apexis {

/// Undirected multigraph with loops. multiplicity(u, v) is symmetric; a loop
/// at v is multiplicity(v, v) and contributes 2 to the degree of v.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int order);
  static Multigraph from_graph(const Graph& g);

  int order() const { return order_; }
  int multiplicity(int u, int v) const { return mult_[u][v]; }
  int degree(int v) const;
  int edge_count() const;
  int loop_count() const;
  int min_degree() const;

  void add_edge(int u, int v, int count = 1);
  void remove_edge(int u, int v);

  /// Drops loops and collapses parallel edges.
  Graph simple() const;

  bool operator==(const Multigraph&) const = default;

 private:
  int order_ = 0;
  std::array<std::array<int, kMaxVertices>, kMaxVertices> mult_{};
};

struct MultigraphSimplification {
  Multigraph result;
  std::vector<int> original;  // surviving index -> original index
};

/// Topological simplification: delete degree 0/1 vertices and smooth degree
/// 2 vertices, keeping parallel edges and loops. A vertex whose only edge is
/// a loop is left in place.
MultigraphSimplification multigraph_simplify(const Multigraph& m);

}  // namespace apexis
