#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apexis/graph.hpp"
#include "apexis/spatial/gauss_code.hpp"

namespace apexis {

struct Passage {
  int crossing = 0;
  bool over = false;
};

/// An edge drawn from u to v, meeting its crossings in order.
struct DiagramEdge {
  std::string name;
  int u = 0;
  int v = 0;
  std::vector<Passage> passages;
};

/// Planar diagram of a spatial graph: the underlying graph plus, for every
/// edge, the crossings it passes in order, and a sign per crossing taken
/// relative to the edges' drawn directions.
class SpatialDiagram {
 public:
  const Graph& graph() const { return graph_; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }
  const std::map<int, int>& crossing_signs() const { return signs_; }
  /// Index into edges() of the edge joining u and v.
  int edge_index(int u, int v) const;

 private:
  friend SpatialDiagram load_diagram(std::string_view text);
  Graph graph_;
  std::vector<std::string> vertex_names_;
  std::vector<DiagramEdge> edges_;
  std::map<int, int> signs_;
  std::map<std::pair<int, int>, int> edge_lookup_;
};

/// Line format:
///   vertex <name>
///   edge <name> <u> <v> : <passage>*     passage = <crossing id><o|u>
///   crossing <id> <+1|-1>
/// '#' starts a comment. Throws ParseError with line and column; invariant
/// violations (a crossing not met exactly once over and once under, an
/// undeclared crossing) name the crossing.
SpatialDiagram load_diagram(std::string_view text);
SpatialDiagram load_diagram_file(const std::string& path);

/// Simple cycles, each once: least vertex first, and its smaller neighbour
/// on the cycle second. Sorted lexicographically.
std::vector<std::vector<int>> cycles(const Graph& g);

using CrossingSet = std::vector<int>;  // sorted ids

struct CycleCrossings {
  std::vector<int> cycle;
  CrossingSet crossings;
};

/// For each cycle, the crossings whose two passages both lie on its edges.
std::vector<CycleCrossings> cycle_crossing_sets(const SpatialDiagram& d);
/// Distinct inclusion-maximal sets, sorted.
std::vector<CrossingSet> maximal_sets(const std::vector<CycleCrossings>& sets);

/// The knot diagram of a cycle: its self-crossings in traversal order, with
/// signs adjusted for edges traversed against their drawn direction.
/// Throws DomainError when the cycle is not in the graph.
SignedGaussCode extract_knot(const SpatialDiagram& d, const std::vector<int>& cycle);

struct CycleVerdict {
  enum class Kind { kUnknot, kKnotted, kUnknown };
  std::vector<int> cycle;
  SignedGaussCode code;
  Kind kind = Kind::kUnknown;
  std::vector<ReidemeisterMove> moves;       // kUnknot: replays to no crossings
  std::optional<LaurentPolynomial> jones;    // kKnotted: differs from 1
  std::string reason;                        // kUnknown
};

std::string to_string(CycleVerdict::Kind kind);

std::vector<CycleVerdict> certify_unknotted(const SpatialDiagram& d);
/// Checks a verdict against the code it claims to describe.
bool verify_cycle_verdict(const CycleVerdict& v);

}  // namespace apexis
