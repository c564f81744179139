#include "apexis/apex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "apexis/multigraph.hpp"

namespace apexis {

namespace {

void check_level(int l) {
  if (l < 0 || l > kMaxApexLevel) {
    throw DomainError("apex level must be in [0, " + std::to_string(kMaxApexLevel) + "], got " + std::to_string(l));
  }
}

// All k-subsets of range(n) in lexicographic order.
std::vector<VertexSet> subsets_of_size(int n, int k) {
  std::vector<VertexSet> out;
  std::vector<int> idx(k);
  std::function<void(int, int, VertexSet)> rec = [&](int start, int depth, VertexSet acc) {
    if (depth == k) {
      out.push_back(acc);
      return;
    }
    for (int v = start; v <= n - (k - depth); ++v) {
      VertexSet next = acc;
      next.insert(v);
      rec(v + 1, depth + 1, next);
    }
  };
  rec(0, 0, VertexSet{});
  return out;
}

int degree_sum(const Graph& g, VertexSet s) {
  int total = 0;
  for (int v : s) total += g.degree(v);
  return total;
}

// Candidates by decreasing degree sum, ties broken lexicographically.
std::vector<VertexSet> ordered_candidates(const Graph& g, int k) {
  std::vector<VertexSet> sets = subsets_of_size(g.order(), k);
  std::vector<std::pair<int, std::vector<int>>> keyed;
  keyed.reserve(sets.size());
  for (VertexSet s : sets) keyed.emplace_back(degree_sum(g, s), s.to_vector());
  std::vector<int> order(sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (keyed[a].first != keyed[b].first) return keyed[a].first > keyed[b].first;
    return keyed[a].second < keyed[b].second;
  });
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (int i : order) out.push_back(sets[i]);
  return out;
}

int edges_after_deleting(const Graph& g, VertexSet s) {
  return g.edge_count() - degree_sum(g, s) + g.edges_within(s);
}

// Sum of the k largest degrees.
int top_degree_capacity(const Graph& g, int k) {
  const std::vector<int> seq = g.degree_sequence();
  int total = 0;
  for (int i = 0; i < k && i < static_cast<int>(seq.size()); ++i) total += seq[i];
  return total;
}

// True when an edge count alone shows a graph on `order` vertices non-planar.
bool exceeds_planar_bound(int order, int edges) { return order >= 3 && edges > 3 * order - 6; }

VertexSet map_to_original(VertexSet s, const std::vector<int>& original) {
  VertexSet out;
  for (int v : s) out.insert(original[v]);
  return out;
}

bool induces_tree(const Graph& g, VertexSet s) {
  if (s.empty()) return false;
  if (g.edges_within(s) != s.size() - 1) return false;
  VertexSet seen = VertexSet::single(s.first());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    const VertexSet next = (g.neighbors(frontier) & s) - seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

int edges_between(const Graph& g, VertexSet a, VertexSet b) {
  int total = 0;
  for (int v : a) total += (g.neighbors(v) & b).size();
  return total;
}

}  // namespace

ApexResult is_l_apex(const Graph& g, int l) {
  check_level(l);
  if (planar(g)) return ApexCertificate{VertexSet{}, *planar_embedding(g)};

  const Reduction r = reduce(g);
  const Graph& h = r.graph;
  const int k = std::min(l, h.order());
  for (VertexSet s : ordered_candidates(h, k)) {
    if (exceeds_planar_bound(h.order() - k, edges_after_deleting(h, s))) continue;
    if (!planar(delete_vertices(h, s).graph)) continue;
    const VertexSet lifted = map_to_original(s, r.original);
    auto embedding = planar_embedding(delete_vertices(g, lifted).graph);
    if (!embedding) throw std::logic_error("apex set of the reduced graph did not lift");
    return ApexCertificate{lifted, std::move(*embedding)};
  }

  NonApexVerdict verdict;
  verdict.l = l;
  verdict.reduction = r.trace;
  verdict.set_size = k;
  verdict.removable_capacity = top_degree_capacity(h, k);
  if (exceeds_planar_bound(h.order() - k, h.edge_count() - verdict.removable_capacity)) {
    verdict.whole_block = true;
    return verdict;
  }
  for (VertexSet s : subsets_of_size(h.order(), k)) {
    CandidateRecord rec;
    rec.set = s;
    const int surviving = edges_after_deleting(h, s);
    if (exceeds_planar_bound(h.order() - k, surviving)) {
      rec.reason = CandidateRecord::Reason::kEdgeBound;
      rec.surviving_edges = surviving;
    } else {
      rec.reason = CandidateRecord::Reason::kMinor;
      rec.model = kuratowski_model(delete_vertices(h, s).graph);
    }
    verdict.records.push_back(std::move(rec));
  }
  return verdict;
}

bool l_apex(const Graph& g, int l) {
  check_level(l);
  if (planar(g)) return true;
  const Graph h = reduce(g).graph;
  const int k = std::min(l, h.order());
  if (exceeds_planar_bound(h.order() - k, h.edge_count() - top_degree_capacity(h, k))) return false;
  for (VertexSet s : ordered_candidates(h, k)) {
    if (exceeds_planar_bound(h.order() - k, edges_after_deleting(h, s))) continue;
    if (planar(delete_vertices(h, s).graph)) return true;
  }
  return false;
}

bool verify_apex_certificate(const Graph& g, int l, const ApexCertificate& cert) {
  if (cert.apex_set.size() > l || !cert.apex_set.is_subset_of(g.vertices())) return false;
  return verify_embedding(delete_vertices(g, cert.apex_set).graph, cert.embedding);
}

bool verify_non_apex_verdict(const Graph& g, const NonApexVerdict& verdict) {
  if (verdict.l < 0 || verdict.l > kMaxApexLevel) return false;
  Graph h;
  try {
    h = replay(g, verdict.reduction).graph;
  } catch (const Error&) {
    return false;
  }
  const int k = std::min(verdict.l, h.order());
  if (verdict.set_size != k) return false;
  if (verdict.whole_block) {
    return verdict.removable_capacity == top_degree_capacity(h, k) &&
           exceeds_planar_bound(h.order() - k, h.edge_count() - verdict.removable_capacity);
  }
  std::vector<VertexSet> expected = subsets_of_size(h.order(), k);
  std::vector<VertexSet> covered;
  for (const CandidateRecord& rec : verdict.records) {
    if (rec.set.size() != k || !rec.set.is_subset_of(h.vertices())) return false;
    if (rec.reason == CandidateRecord::Reason::kEdgeBound) {
      if (rec.surviving_edges != edges_after_deleting(h, rec.set)) return false;
      if (!exceeds_planar_bound(h.order() - k, rec.surviving_edges)) return false;
    } else {
      if (!rec.model || !verify_minor_model(delete_vertices(h, rec.set).graph, *rec.model)) return false;
      const Graph& pattern = rec.model->pattern;
      if (!(pattern == complete(5)) && !(pattern == complete_bipartite(3, 3))) return false;
    }
    covered.push_back(rec.set);
  }
  std::sort(covered.begin(), covered.end());
  std::sort(expected.begin(), expected.end());
  return covered == expected;
}

std::optional<VertexSet> brute_force_apex_set(const Graph& g, int l) {
  check_level(l);
  for (int k = 0; k <= std::min(l, g.order()); ++k) {
    for (VertexSet s : subsets_of_size(g.order(), k)) {
      if (planar(delete_vertices(g, s).graph)) return s;
    }
  }
  return std::nullopt;
}

std::vector<Edge> apex_pairs(const Graph& g) {
  std::vector<Edge> out;
  for (VertexSet s : subsets_of_size(g.order(), 2)) {
    if (planar(delete_vertices(g, s).graph)) {
      const std::vector<int> v = s.to_vector();
      out.emplace_back(v[0], v[1]);
    }
  }
  return out;
}

bool valid_genk33(const Graph& g, VertexSet domain, const GenK33Partition& p) {
  if (p.apex < 0 || p.apex >= g.order() || !domain.contains(p.apex)) return false;
  const std::array<VertexSet, 5> parts{p.v2, p.v3, p.w[0], p.w[1], p.w[2]};
  VertexSet seen;
  for (VertexSet part : parts) {
    if (part.intersects(seen) || !induces_tree(g, part)) return false;
    seen |= part;
  }
  if (seen != domain - VertexSet::single(p.apex)) return false;
  if (edges_between(g, p.v2, p.v3) != 0) return false;
  for (int i = 0; i < 3; ++i) {
    if (edges_between(g, p.w[i], p.v2) != 1 || edges_between(g, p.w[i], p.v3) != 1) return false;
    for (int j = i + 1; j < 3; ++j) {
      if (edges_between(g, p.w[i], p.w[j]) != 0) return false;
    }
  }
  return true;
}

std::optional<GenK33Partition> genk33(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " not in graph");
  const Deletion rest = delete_vertices(g, VertexSet::single(v));
  if (!rest.graph.connected()) return std::nullopt;
  const MultigraphSimplification simple = multigraph_simplify(Multigraph::from_graph(rest.graph));
  if (simple.result.order() != 2 || simple.result.loop_count() != 0 || simple.result.multiplicity(0, 1) != 3) {
    return std::nullopt;
  }
  const int x = rest.original[simple.original[0]];
  const int y = rest.original[simple.original[1]];
  if (g.adjacent(x, y)) return std::nullopt;

  const VertexSet inner = g.vertices() - VertexSet{v, x, y};
  VertexSet near_x = VertexSet::single(x);
  VertexSet near_y = VertexSet::single(y);
  std::vector<VertexSet> middle;
  VertexSet unvisited = inner;
  while (!unvisited.empty()) {
    VertexSet comp = VertexSet::single(unvisited.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      const VertexSet next = (g.neighbors(frontier) & inner) - comp;
      comp |= next;
      frontier = next;
    }
    unvisited -= comp;
    const bool tx = g.neighbors(x).intersects(comp);
    const bool ty = g.neighbors(y).intersects(comp);
    if (tx && ty) {
      middle.push_back(comp);
    } else if (tx) {
      near_x |= comp;
    } else if (ty) {
      near_y |= comp;
    } else {
      return std::nullopt;
    }
  }
  if (middle.size() != 3) return std::nullopt;
  std::sort(middle.begin(), middle.end(), [](VertexSet a, VertexSet b) { return a.first() < b.first(); });

  GenK33Partition p;
  p.apex = v;
  const auto smaller = [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.to_vector() < b.to_vector();
  };
  p.v2 = smaller(near_y, near_x) ? near_y : near_x;
  p.v3 = p.v2 == near_x ? near_y : near_x;
  for (int i = 0; i < 3; ++i) p.w[i] = middle[i];
  if (!valid_genk33(g, g.vertices(), p)) return std::nullopt;
  return p;
}

std::optional<Edge> lemma25_shortcut(const Graph& g, int a, int b, int c, const GenK33Partition& p) {
  for (int v : {a, b, c}) {
    if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " not in graph");
  }
  if (a == b || b == c || a == c || p.apex != c) {
    throw PreconditionError("shortcut needs distinct a, b and a partition centred at c");
  }
  if (!valid_genk33(g, g.vertices() - VertexSet{a, b}, p)) {
    throw PreconditionError("not a generalised K3,3 partition for (G - a, b; c)");
  }
  const auto misses_some_w = [&](int u) {
    return std::any_of(p.w.begin(), p.w.end(), [&](VertexSet w) { return !g.neighbors(u).intersects(w); });
  };
  std::optional<Edge> pair;
  if (misses_some_w(a)) {
    pair = Edge{std::min(b, c), std::max(b, c)};
  } else if (misses_some_w(b)) {
    pair = Edge{std::min(a, c), std::max(a, c)};
  }
  if (pair && !planar(delete_vertices(g, VertexSet{pair->first, pair->second}).graph)) return std::nullopt;
  return pair;
}

}  // namespace apexis
