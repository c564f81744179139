#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "apexis/graph.hpp"
#include "apexis/planarity.hpp"

namespace apexis {

inline constexpr int kMaxApexLevel = 3;

/// G - apex_set is planar; the embedding is of delete_vertices(G, apex_set).graph.
struct ApexCertificate {
  VertexSet apex_set;
  PlanarEmbedding embedding;
};

/// Why one deletion set (indices of the reduced graph) leaves a non-planar graph.
struct CandidateRecord {
  enum class Reason { kMinor, kEdgeBound };
  VertexSet set;
  Reason reason = Reason::kMinor;
  std::optional<MinorModel> model;  // of delete_vertices(reduced, set).graph
  int surviving_edges = 0;          // for kEdgeBound
};

/// Exhaustion record for "not l-apex". The search runs on reduce(G): the
/// verdict transfers back because reduction preserves being l-apex. Sets of
/// size k = min(l, |reduced|) are covered either one by one or, when
/// whole_block is set, all at once because even the k largest degrees
/// cannot remove enough edges to reach 3(n - k) - 6.
struct NonApexVerdict {
  int l = 0;
  ReductionTrace reduction;
  int set_size = 0;
  bool whole_block = false;
  int removable_capacity = 0;  // sum of the set_size largest degrees
  std::vector<CandidateRecord> records;
};

using ApexResult = std::variant<ApexCertificate, NonApexVerdict>;

/// Throws DomainError unless 0 <= l <= kMaxApexLevel.
ApexResult is_l_apex(const Graph& g, int l);
/// Same decision without certificates, for sweeps.
bool l_apex(const Graph& g, int l);

bool verify_apex_certificate(const Graph& g, int l, const ApexCertificate& cert);
bool verify_non_apex_verdict(const Graph& g, const NonApexVerdict& verdict);

/// Unpruned search over every subset of size <= l in order of size, then
/// lexicographically; no reduction. Returns the first set whose deletion is planar.
std::optional<VertexSet> brute_force_apex_set(const Graph& g, int l);

/// All pairs {a, b} with g - a, b planar, sorted.
std::vector<Edge> apex_pairs(const Graph& g);

/// (G; v) is a generalised K3,3 when G - v is topologically K3,3 minus a
/// vertex. The five sets are trees; contracting them leaves exactly the
/// edges Wi-V2 and Wi-V3.
struct GenK33Partition {
  int apex = -1;
  VertexSet v2;
  VertexSet v3;
  std::array<VertexSet, 3> w;
};

/// Checks the partition against g restricted to `domain` (v included).
bool valid_genk33(const Graph& g, VertexSet domain, const GenK33Partition& p);
/// Partition with V2, V3 minimal, or none.
std::optional<GenK33Partition> genk33(const Graph& g, int v);

/// With p a partition for (g - a, b; c): if N(a) misses some Wi, g - b, c is
/// planar; symmetrically for b. The pair is re-tested before it is returned.
/// Throws PreconditionError when p is not a valid partition.
std::optional<Edge> lemma25_shortcut(const Graph& g, int a, int b, int c, const GenK33Partition& p);

}  // namespace apexis
