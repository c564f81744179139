#include "apexis/generate.hpp"

#include <algorithm>
#include <unordered_set>

#include "apexis/error.hpp"

namespace apexis {

int GenSpec::effective_max_edges() const {
  const int full = order * (order - 1) / 2;
  return max_edges < 0 ? full : std::min(max_edges, full);
}

std::string GenSpec::unsatisfiable_reason() const {
  if (order < 0 || order > kMaxVertices) return "vertex count out of range";
  const int hi = effective_max_edges();
  if (min_edges > hi) return "minimum edge count exceeds maximum";
  if (min_degree > 0 && min_degree > order - 1) return "minimum degree exceeds n - 1";
  if (order * min_degree > 2 * hi) return "minimum degree needs more edges than allowed";
  return {};
}

Generator::Generator(GenSpec spec, std::size_t split_target) : spec_(std::move(spec)) {
  if (spec_.order < 0 || spec_.order > kMaxVertices) {
    throw SizeError("generation supports at most 32 vertices");
  }
  max_edges_ = spec_.effective_max_edges();
  satisfiable_ = spec_.unsatisfiable_reason().empty();
  if (!satisfiable_) return;

  Graph root(spec_.order);
  std::vector<Node> level{Node{root, canonical_key(root)}};
  if (deficiency(root) > 2 * max_edges_) level.clear();
  while (!level.empty() && level.size() < split_target && level.front().graph.edge_count() < max_edges_) {
    std::vector<Node> next;
    for (const Node& node : level) {
      if (emits(node.graph)) prefix_.push_back(node.graph);
      expand(node, [&](Node&& child) { next.push_back(std::move(child)); });
    }
    level = std::move(next);
  }
  frontier_ = std::move(level);
}

std::size_t Generator::shard_count() const { return satisfiable_ ? frontier_.size() + 1 : 0; }

void Generator::run_shard(std::size_t index, const Visitor& visit) const {
  if (index >= shard_count()) throw DomainError("shard index out of range");
  if (index == 0) {
    for (const Graph& g : prefix_) visit(g);
    return;
  }
  descend(frontier_[index - 1], visit);
}

void Generator::run(const Visitor& visit) const {
  for (std::size_t i = 0; i < shard_count(); ++i) run_shard(i, visit);
}

bool Generator::emits(const Graph& g) const {
  const int m = g.edge_count();
  if (m < spec_.min_edges || m > max_edges_) return false;
  if (spec_.min_degree > 0 && g.min_degree() < spec_.min_degree) return false;
  return !spec_.predicate || spec_.predicate(g);
}

int Generator::deficiency(const Graph& g) const {
  int total = 0;
  for (int v = 0; v < g.order(); ++v) total += std::max(0, spec_.min_degree - g.degree(v));
  return total;
}

void Generator::descend(const Node& node, const Visitor& visit) const {
  if (emits(node.graph)) visit(node.graph);
  if (node.graph.edge_count() >= max_edges_) return;
  expand(node, [&](Node&& child) { descend(child, visit); });
}

void Generator::expand(const Node& parent, const std::function<void(Node&&)>& child) const {
  const Graph& p = parent.graph;
  const int n = p.order();
  const int m = p.edge_count() + 1;
  if (m > max_edges_) return;
  std::array<int, kMaxVertices> deg{};
  int base_deficiency = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = p.degree(v);
    base_deficiency += std::max(0, spec_.min_degree - deg[v]);
  }
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  std::vector<Node> kept;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (p.adjacent(u, v)) continue;
      const int d = base_deficiency - (deg[u] < spec_.min_degree) - (deg[v] < spec_.min_degree);
      if (d > 2 * (max_edges_ - m)) continue;

      // The last edge must carry the largest (max end degree, min end degree)
      // among the edges of the child.
      deg[u]++;
      deg[v]++;
      int top = 0;
      for (int w = 0; w < n; ++w) top = std::max(top, deg[w]);
      const int hi = std::max(deg[u], deg[v]);
      const int lo = std::min(deg[u], deg[v]);
      bool ok = hi == top;
      int best_lo = 0;
      if (ok) {
        Graph::Rows rows = p.rows();
        rows[u] |= std::uint32_t{1} << v;
        rows[v] |= std::uint32_t{1} << u;
        for (int w = 0; w < n; ++w) {
          if (deg[w] != top) continue;
          for (int x : VertexSet(rows[w])) best_lo = std::max(best_lo, deg[x]);
        }
        ok = lo == std::min(best_lo, top);
      }
      deg[u]--;
      deg[v]--;
      if (!ok) continue;

      Graph c = p;
      c.add_edge(u, v);
      CanonicalForm form = canonical_form(c);
      if (seen.contains(form.key)) continue;

      // Canonical last edge: among maximal-invariant edges, the one whose
      // canonical end labels form the largest pair.
      int cdeg[kMaxVertices];
      for (int w = 0; w < n; ++w) cdeg[w] = c.degree(w);
      std::pair<int, int> best_inv{-1, -1};
      std::pair<int, int> best_label{-1, -1};
      Edge star{-1, -1};
      for (auto [a, b] : c.edges()) {
        const std::pair<int, int> inv{std::max(cdeg[a], cdeg[b]), std::min(cdeg[a], cdeg[b])};
        const std::pair<int, int> label{std::max(form.labeling[a], form.labeling[b]),
                                        std::min(form.labeling[a], form.labeling[b])};
        if (inv > best_inv || (inv == best_inv && label > best_label)) {
          best_inv = inv;
          best_label = label;
          star = {a, b};
        }
      }
      bool accept = star == Edge{u, v};
      if (!accept) {
        Graph reduced = c;
        reduced.remove_edge(star.first, star.second);
        accept = canonical_key(reduced) == parent.key;
      }
      seen.insert(form.key);
      if (!accept) continue;
      kept.push_back(Node{form.key.graph(), form.key});
    }
  }
  for (Node& node : kept) child(std::move(node));
}

std::vector<Graph> generate(const GenSpec& spec) {
  Generator gen(spec);
  std::vector<std::pair<CanonicalKey, Graph>> out;
  gen.run([&](const Graph& g) { out.emplace_back(canonical_key(g), g); });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> graphs;
  graphs.reserve(out.size());
  for (auto& [key, g] : out) graphs.push_back(std::move(g));
  return graphs;
}

}  // namespace apexis
