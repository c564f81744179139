#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "apexis/graph.hpp"

namespace apexis {

/// Rotation system: for each vertex, its neighbours in cyclic order.
/// Faces are traced with the rule (u -> v) is followed by (v -> w) where w
/// follows u in the rotation at v.
struct PlanarEmbedding {
  std::vector<std::vector<int>> rotation;

  /// Face boundaries as closed vertex walks. Isolated vertices contribute no walk.
  std::vector<std::vector<int>> faces() const;
};

/// Minor model of `pattern` in a host graph: disjoint connected branch sets,
/// one per pattern vertex, and for each pattern edge (in pattern.edges()
/// order) a host edge joining the two branch sets.
struct MinorModel {
  Graph pattern;
  std::vector<VertexSet> branch_sets;
  std::vector<Edge> realization;
};

using PlanarityCertificate = std::variant<PlanarEmbedding, MinorModel>;

/// Euler check: rotation matches adjacency and V - E + F = 2C.
bool verify_embedding(const Graph& g, const PlanarEmbedding& embedding);
bool verify_minor_model(const Graph& host, const MinorModel& model);

/// Boolean planarity test without certificates.
bool planar(const Graph& g);
std::optional<PlanarEmbedding> planar_embedding(const Graph& g);
/// Returns an embedding, or a K5 / K3,3 minor model extracted from a
/// minimal non-planar subgraph.
PlanarityCertificate is_planar(const Graph& g);
/// Kuratowski obstruction of a non-planar graph. Throws PreconditionError on planar input.
MinorModel kuratowski_model(const Graph& g);

inline constexpr int kMaxPatternOrder = 10;

/// Branch-set search for a minor model of pattern in g.
/// Throws CapacityError when the pattern exceeds kMaxPatternOrder vertices.
std::optional<MinorModel> has_minor(const Graph& g, const Graph& pattern);

/// A non-planar graph on n >= 6 vertices with no isolated vertex has at
/// least n + 3 - floor((n - 6) / 2) edges.
int nonplanar_edge_lower_bound(int n);

}  // namespace apexis
