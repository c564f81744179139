#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "apexis/graph.hpp"

namespace apexis {

/// Adjacency of a canonically relabeled graph. Equal keys <=> isomorphic graphs.
struct CanonicalKey {
  int order = 0;
  Graph::Rows rows{};

  Graph graph() const { return Graph::from_rows(order, rows); }
  std::uint64_t hash() const;

  bool operator==(const CanonicalKey& other) const;
  std::strong_ordering operator<=>(const CanonicalKey& other) const;
};

struct CanonicalForm {
  CanonicalKey key;
  /// labeling[v] is the canonical index of vertex v; applying it to the
  /// input graph reproduces key.rows exactly.
  std::vector<int> labeling;
};

CanonicalForm canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);
/// The canonical representative of g's isomorphism class.
Graph canonical_graph(const Graph& g);

/// perm with relabel(g, perm) == h, when g and h are isomorphic.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h);

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const { return static_cast<std::size_t>(k.hash()); }
};

}  // namespace apexis
