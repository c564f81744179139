#include "apexis/catalog.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "apexis/canon.hpp"
#include "apexis/graph6.hpp"

namespace apexis {

namespace {

// Frozen from the n = 9, e = 21, min degree 3 classification and the K7
// closure; the tests re-derive each one.
constexpr const char* kE9 = "HxHYs}]";
constexpr const char* kH8 = "Gs\\zz{";
constexpr const char* kF9 = "HYQ[p{~";
constexpr const char* kH9 = "HIQ|to~";

bool same_class(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b);
}

void name_members(std::vector<FamilyMember>& members) {
  const Graph k7 = complete(7);
  const Graph named[] = {k7, h8(), f9(), h9()};
  const char* names[] = {"K7", "H8", "F9", "H9"};
  const CanonicalKey e9_key = canonical_key(e9());

  std::vector<int> f10;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Graph& g = members[i].graph;
    for (int k = 0; k < 4; ++k) {
      if (same_class(g, named[k])) members[i].name = names[k];
    }
    if (!members[i].name.empty() || g.order() != 10) continue;
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 3 && canonical_key(y_triangle(g, v)) == e9_key) {
        f10.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  std::sort(f10.begin(), f10.end(), [&](int a, int b) {
    return canonical_key(members[a].graph) < canonical_key(members[b].graph);
  });
  for (std::size_t k = 0; k < f10.size(); ++k) {
    members[f10[k]].name = f10.size() == 1 ? std::string("F10") : "F10" + std::string(1, static_cast<char>('a' + k));
  }

  std::map<int, std::vector<int>> unnamed;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].name.empty()) unnamed[members[i].graph.order()].push_back(static_cast<int>(i));
  }
  for (auto& [order, idx] : unnamed) {
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return canonical_key(members[a].graph) < canonical_key(members[b].graph);
    });
    for (std::size_t k = 0; k < idx.size(); ++k) {
      members[idx[k]].name = "n" + std::to_string(order) + "." + std::to_string(k + 1);
    }
  }
}

std::string isolated_suffix(int count) {
  if (count == 0) return "";
  if (count == 1) return "+K1";
  return "+" + std::to_string(count) + "K1";
}

}  // namespace

std::vector<FamilyMember> delta_y_closure(const Graph& seed) {
  std::vector<FamilyMember> members;
  std::unordered_map<CanonicalKey, int, CanonicalKeyHash> index;
  members.push_back(FamilyMember{seed, "", -1, {-1, -1, -1}});
  index.emplace(canonical_key(seed), 0);
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Graph g = members[head].graph;
    const auto tris = triangles(g);
    if (!tris.empty() && g.order() >= kMaxVertices) {
      throw CapacityError("triangle-Y move on family member " + to_graph6(g) + " would exceed 32 vertices");
    }
    for (const auto& t : tris) {
      Graph child = triangle_y(g, t[0], t[1], t[2]);
      const CanonicalKey key = canonical_key(child);
      if (index.contains(key)) continue;
      index.emplace(key, static_cast<int>(members.size()));
      members.push_back(FamilyMember{std::move(child), "", static_cast<int>(head), t});
    }
  }
  if (same_class(seed, complete(7))) name_members(members);
  return members;
}

const std::vector<FamilyMember>& k7_family() {
  static const std::vector<FamilyMember> family = delta_y_closure(complete(7));
  return family;
}

Graph replay_provenance(const std::vector<FamilyMember>& members, int index) {
  if (index < 0 || index >= static_cast<int>(members.size())) throw DomainError("no family member " + std::to_string(index));
  const FamilyMember& m = members[index];
  if (m.parent < 0) return m.graph;
  const Graph parent = replay_provenance(members, m.parent);
  return triangle_y(parent, m.triangle[0], m.triangle[1], m.triangle[2]);
}

Graph e9() { return from_graph6(kE9); }
Graph h8() { return from_graph6(kH8); }
Graph f9() { return from_graph6(kF9); }
Graph h9() { return from_graph6(kH9); }

std::vector<Graph> f10_candidates() {
  std::vector<Graph> out;
  for (const FamilyMember& m : k7_family()) {
    if (m.name.starts_with("F10")) out.push_back(m.graph);
  }
  return out;
}

std::optional<std::string> identify(const Graph& g) {
  const VertexSet isolated = [&] {
    VertexSet s;
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 0) s.insert(v);
    }
    return s;
  }();
  const Graph core = delete_vertices(g, isolated).graph;
  const std::string suffix = isolated_suffix(isolated.size());
  if (same_class(core, e9())) return "E9" + suffix;
  for (const FamilyMember& m : k7_family()) {
    if (same_class(core, m.graph)) return m.name + suffix;
  }
  return std::nullopt;
}

std::optional<FamilyMinor> family_minor(const Graph& g) {
  for (const FamilyMember& m : k7_family()) {
    if (m.graph.order() > kMaxPatternOrder || m.graph.order() > g.order()) continue;
    if (auto model = has_minor(g, m.graph)) return FamilyMinor{m.name, std::move(*model)};
  }
  return std::nullopt;
}

ClassificationReport classify(int n, int e, int min_degree, const SweepOptions& options) {
  if (n < 0 || n > 13) throw DomainError("classification supports up to 13 vertices");
  ClassificationReport report;
  report.order = n;
  report.edges = e;
  report.min_degree = min_degree;
  const SweepSpec spec{{.order = n, .min_edges = e, .max_edges = e, .min_degree = min_degree},
                       [](const Graph& g) { return !l_apex(g, 2); },
                       "classify-n" + std::to_string(n) + "-e" + std::to_string(e) + "-d" + std::to_string(min_degree)};
  const SweepResult sweep = run_sweep(spec, options);
  report.total_classes = sweep.total_classes();
  for (const Graph& g : sweep.hits) {
    ClassifiedGraph c;
    c.graph = g;
    c.verdict = std::get<NonApexVerdict>(is_l_apex(g, 2));
    c.family = family_minor(g);
    c.name = identify(g);
    report.non_apex.push_back(std::move(c));
  }
  return report;
}

MainTheoremReport verify_main_theorem(int max_n, const SweepOptions& options) {
  if (max_n < 0 || max_n > 13) throw DomainError("max_n must be in [0, 13]");
  MainTheoremReport report;
  report.max_order = max_n;
  for (int n = 4; n <= max_n; ++n) {
    const SweepSpec spec{{.order = n, .max_edges = 20, .min_degree = 3},
                         [](const Graph& g) { return !l_apex(g, 2); },
                         "main-n" + std::to_string(n)};
    const SweepResult sweep = run_sweep(spec, options);
    for (std::size_t m = 0; m < sweep.classes_by_edges.size(); ++m) {
      if (sweep.classes_by_edges[m] == 0) continue;
      report.strata.push_back({n, static_cast<int>(m), sweep.classes_by_edges[m], sweep.hits_by_edges[m]});
    }
    report.counterexamples.insert(report.counterexamples.end(), sweep.hits.begin(), sweep.hits.end());
  }
  return report;
}

bool Table1Report::passed() const {
  return std::all_of(cells.begin(), cells.end(), [](const Table1Cell& c) { return c.matches(); });
}

Table1Report verify_table1(const SweepOptions& options) {
  Table1Report report;
  const std::array<std::array<int, 3>, 14> cells{{{6, 9, 1},
                                                  {6, 10, 1},
                                                  {7, 9, 0},
                                                  {7, 10, 2},
                                                  {7, 11, 9},
                                                  {8, 9, 0},
                                                  {8, 10, 1},
                                                  {8, 11, 11},
                                                  {9, 9, 0},
                                                  {9, 10, 0},
                                                  {9, 11, 3},
                                                  {10, 11, 1},
                                                  {10, 12, 15},
                                                  {11, 12, 3}}};
  std::map<int, std::pair<int, int>> ranges;
  for (const auto& c : cells) {
    auto [it, fresh] = ranges.emplace(c[0], std::pair{c[1], c[1]});
    if (!fresh) it->second = {std::min(it->second.first, c[1]), std::max(it->second.second, c[1])};
  }
  std::map<int, SweepResult> sweeps;
  for (const auto& [n, range] : ranges) {
    const SweepSpec spec{{.order = n, .min_edges = range.first, .max_edges = range.second, .min_degree = 1},
                         [](const Graph& g) { return !planar(g); },
                         "table1-n" + std::to_string(n)};
    sweeps.emplace(n, run_sweep(spec, options));
  }
  for (const auto& c : cells) {
    report.cells.push_back({c[0], c[1], c[2], sweeps.at(c[0]).hits_by_edges[c[1]]});
  }
  return report;
}

EdgeBoundReport verify_edge_bound(const SweepOptions& options) {
  EdgeBoundReport report;
  for (int n = 6; n <= 11; ++n) {
    const SweepSpec spec{{.order = n, .max_edges = 13, .min_degree = 1},
                         [](const Graph& g) { return !planar(g); },
                         "edge-bound-n" + std::to_string(n)};
    const SweepResult sweep = run_sweep(spec, options);
    for (std::size_t m = 0; m < sweep.hits_by_edges.size(); ++m) {
      if (sweep.hits_by_edges[m] == 0) continue;
      const std::int64_t bad = static_cast<int>(m) < nonplanar_edge_lower_bound(n) ? sweep.hits_by_edges[m] : 0;
      report.strata.push_back({n, static_cast<int>(m), sweep.hits_by_edges[m], bad});
    }
    for (const Graph& g : sweep.hits) {
      if (g.edge_count() < nonplanar_edge_lower_bound(n)) report.violations.push_back(g);
    }
  }
  return report;
}

Graph j1() { return complement(disjoint_union(complete(2), cycle(6))); }

OneApexReport verify_1apex_threshold(const SweepOptions& options) {
  OneApexReport report;
  for (int n = 4; n <= 9; ++n) {
    const SweepSpec spec{{.order = n, .max_edges = 14, .min_degree = 3},
                         [](const Graph& g) { return !l_apex(g, 1); },
                         "one-apex-n" + std::to_string(n)};
    const SweepResult sweep = run_sweep(spec, options);
    for (std::size_t m = 0; m < sweep.classes_by_edges.size(); ++m) {
      if (sweep.classes_by_edges[m] == 0) continue;
      report.strata.push_back({n, static_cast<int>(m), sweep.classes_by_edges[m], sweep.hits_by_edges[m]});
    }
    report.counterexamples.insert(report.counterexamples.end(), sweep.hits.begin(), sweep.hits.end());
  }
  const auto not_1_apex = [](const Graph& g) {
    const ApexResult r = is_l_apex(g, 1);
    const auto* verdict = std::get_if<NonApexVerdict>(&r);
    return verdict != nullptr && verify_non_apex_verdict(g, *verdict);
  };
  report.j1_not_1_apex = not_1_apex(j1());
  report.two_k33_not_1_apex = not_1_apex(disjoint_union(complete_bipartite(3, 3), complete_bipartite(3, 3)));
  return report;
}

}  // namespace apexis
