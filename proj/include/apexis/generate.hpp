#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "apexis/canon.hpp"
#include "apexis/graph.hpp"

namespace apexis {

/// What to enumerate: one vertex count, an edge-count range, a minimum
/// degree, and an optional predicate applied to emitted graphs.
struct GenSpec {
  int order = 0;
  int min_edges = 0;
  int max_edges = -1;  // -1: n(n-1)/2
  int min_degree = 0;
  std::function<bool(const Graph&)> predicate;

  int effective_max_edges() const;
  /// Empty when satisfiable, otherwise the reason it is not.
  std::string unsatisfiable_reason() const;
};

/// Isomorph-free generation by edge augmentation within a fixed vertex
/// count. A child P + e is kept when P is isomorphic to C - e*, where e* is
/// the canonically chosen last edge of C; children of one parent are
/// deduplicated by canonical form.
///
/// The tree is cut at a fixed frontier depth into shards. Shard 0 emits
/// the graphs above the frontier, shard i > 0 the subtree under frontier
/// node i - 1. The cut depends only on the spec, never on worker count.
class Generator {
 public:
  using Visitor = std::function<void(const Graph&)>;

  explicit Generator(GenSpec spec, std::size_t split_target = 512);

  const GenSpec& spec() const { return spec_; }
  std::size_t shard_count() const;
  /// Emits canonical representatives, in discovery order.
  void run_shard(std::size_t index, const Visitor& visit) const;
  void run(const Visitor& visit) const;

 private:
  struct Node {
    Graph graph;  // canonical representative
    CanonicalKey key;
  };

  void expand(const Node& parent, const std::function<void(Node&&)>& child) const;
  void descend(const Node& node, const Visitor& visit) const;
  bool emits(const Graph& g) const;
  int deficiency(const Graph& g) const;

  GenSpec spec_;
  int max_edges_ = 0;
  bool satisfiable_ = true;
  std::vector<Graph> prefix_;  // emitted by shard 0
  std::vector<Node> frontier_;
};

/// All classes matching spec, sorted by canonical key.
std::vector<Graph> generate(const GenSpec& spec);

}  // namespace apexis
