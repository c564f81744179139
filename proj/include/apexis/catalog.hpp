#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apexis/apex.hpp"
#include "apexis/graph.hpp"
#include "apexis/planarity.hpp"
#include "apexis/sweep.hpp"

namespace apexis {

/// A graph reached from the seed by triangle-Y moves. parent < 0 marks the
/// seed; otherwise graph == triangle_y(members[parent].graph, triangle...).
struct FamilyMember {
  Graph graph;
  std::string name;
  int parent = -1;
  std::array<int, 3> triangle{-1, -1, -1};
};

/// Breadth-first closure under triangle-Y over isomorphism classes, in
/// discovery order (triangles visited lexicographically). Members are
/// named: K7, H8, F9, H9 and F10 where the structure forces the name,
/// otherwise "n<order>.<k>" numbered by canonical order within the order.
/// Throws CapacityError naming the member whose move would pass 32 vertices.
std::vector<FamilyMember> delta_y_closure(const Graph& seed);
/// The closure of K7.
const std::vector<FamilyMember>& k7_family();
/// Rebuilds members[i] from the seed by replaying the recorded moves.
Graph replay_provenance(const std::vector<FamilyMember>& members, int index);

/// Named graphs, frozen from the classification and closure runs.
Graph e9();
Graph h8();
Graph f9();
Graph h9();
/// 10-vertex family members with a Y-triangle move onto E9.
std::vector<Graph> f10_candidates();

/// Name of g's class among the family and E9, also recognising the same
/// graph padded with isolated vertices ("K7+K1", "K7+2K1").
std::optional<std::string> identify(const Graph& g);

struct FamilyMinor {
  std::string member;
  MinorModel model;
};

/// First family member, in closure order, that g contains as a minor.
/// Members above kMaxPatternOrder vertices are not searched.
std::optional<FamilyMinor> family_minor(const Graph& g);

struct ClassifiedGraph {
  Graph graph;  // canonical representative
  NonApexVerdict verdict;
  std::optional<FamilyMinor> family;
  std::optional<std::string> name;
};

struct ClassificationReport {
  int order = 0;
  int edges = 0;
  int min_degree = 0;
  std::int64_t total_classes = 0;
  std::vector<ClassifiedGraph> non_apex;
};

/// Non-2-apex classes with exactly n vertices, e edges and minimum degree >= min_degree.
ClassificationReport classify(int n, int e, int min_degree, const SweepOptions& options = {});

struct Stratum {
  int order = 0;
  int edges = 0;
  std::int64_t classes = 0;
  std::int64_t failures = 0;
};

struct MainTheoremReport {
  int max_order = 0;
  std::vector<Stratum> strata;  // nonempty (n, e) strata, n ascending then e
  std::vector<Graph> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

/// Every class with minimum degree >= 3, at most 20 edges and at most max_n
/// vertices is checked for being 2-apex. Throws DomainError for max_n > 13.
MainTheoremReport verify_main_theorem(int max_n, const SweepOptions& options = {});

struct Table1Cell {
  int order = 0;
  int edges = 0;
  std::int64_t expected = 0;
  std::int64_t computed = 0;
  bool matches() const { return expected == computed; }
};

struct Table1Report {
  std::vector<Table1Cell> cells;
  bool passed() const;
};

/// Non-planar classes without isolated vertices, per cell.
Table1Report verify_table1(const SweepOptions& options = {});

struct EdgeBoundReport {
  std::vector<Stratum> strata;  // classes = non-planar classes checked
  std::vector<Graph> violations;
  bool passed() const { return violations.empty(); }
};

/// Non-planar classes with no isolated vertex, 6 <= n <= 11 and at most 13
/// edges, checked against nonplanar_edge_lower_bound.
EdgeBoundReport verify_edge_bound(const SweepOptions& options = {});

struct OneApexReport {
  std::vector<Stratum> strata;
  std::vector<Graph> counterexamples;
  bool j1_not_1_apex = false;
  bool two_k33_not_1_apex = false;
  bool passed() const { return counterexamples.empty() && j1_not_1_apex && two_k33_not_1_apex; }
};

/// Complement of K2 + C6.
Graph j1();
/// Classes with minimum degree >= 3 and at most 14 edges are 1-apex; J1 and
/// two disjoint K3,3 are not.
OneApexReport verify_1apex_threshold(const SweepOptions& options = {});

}  // namespace apexis
