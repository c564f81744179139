#include "apexis/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace apexis {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw SizeError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph::Graph(int order) : order_(order) { check_order(order); }

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_rows(int order, const Rows& rows) {
  Graph g(order);
  const std::uint32_t mask = VertexSet::range(order).bits();
  int degree_sum = 0;
  for (int v = 0; v < order; ++v) {
    g.rows_[v] = rows[v] & mask & ~(std::uint32_t{1} << v);
    degree_sum += std::popcount(g.rows_[v]);
  }
  for (int u = 0; u < order; ++u) {
    for (int v : VertexSet(g.rows_[u])) {
      if (!g.adjacent(v, u)) throw PreconditionError("adjacency rows are not symmetric");
    }
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_) {
    throw DomainError("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(order_));
  }
}

int Graph::min_degree() const {
  int best = order_ == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < order_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq;
  seq.reserve(order_);
  for (int v = 0; v < order_; ++v) seq.push_back(degree(v));
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order_; ++u) {
    for (int v : VertexSet(rows_[u] & ~((std::uint32_t{2} << u) - 1))) out.emplace_back(u, v);
  }
  return out;
}

VertexSet Graph::neighbors(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= neighbors(v);
  return out;
}

int Graph::edges_within(VertexSet s) const {
  int twice = 0;
  for (int v : s) twice += (neighbors(v) & s).size();
  return twice / 2;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet left = vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = neighbors(frontier) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool Graph::connected() const { return order_ <= 1 || components().size() == 1; }

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u) + " in a simple graph");
  if (adjacent(u, v)) return;
  rows_[u] |= std::uint32_t{1} << v;
  rows_[v] |= std::uint32_t{1} << u;
  ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!adjacent(u, v)) return;
  rows_[u] &= ~(std::uint32_t{1} << v);
  rows_[v] &= ~(std::uint32_t{1} << u);
  --edge_count_;
}

bool Graph::operator==(const Graph& other) const {
  return order_ == other.order_ && std::equal(rows_.begin(), rows_.begin() + order_, other.rows_.begin());
}

std::string Graph::to_string() const {
  std::ostringstream out;
  out << "Graph(" << order_ << ";";
  for (auto [u, v] : edges()) out << " " << u << "-" << v;
  out << ")";
  return out.str();
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int m, int n) {
  if (m < 0 || n < 0) throw SizeError("negative part size");
  Graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = m; v < m + n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw SizeError("cycle needs at least 3 vertices, got " + std::to_string(n));
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int edges) {
  if (edges < 0) throw SizeError("negative path length");
  Graph g(edges + 1);
  for (int v = 0; v < edges; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star(int edges) {
  if (edges < 0) throw SizeError("negative star size");
  Graph g(edges + 1);
  for (int v = 1; v <= edges; ++v) g.add_edge(0, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  const int shift = g.order();
  for (auto [u, v] : h.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Deletion delete_vertices(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw DomainError("deleted vertex set is not a subset of V(G)");
  Deletion out;
  std::array<int, kMaxVertices> index{};
  for (int v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    index[v] = static_cast<int>(out.original.size());
    out.original.push_back(v);
  }
  out.graph = Graph(static_cast<int>(out.original.size()));
  for (auto [u, v] : g.edges()) {
    if (!s.contains(u) && !s.contains(v)) out.graph.add_edge(index[u], index[v]);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) { return delete_vertices(g, g.vertices() - keep).graph; }

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw DomainError("permutation size does not match order");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph smooth_simplify(const Graph& g, int c) {
  if (c < 0 || c >= g.order()) throw DomainError("vertex " + std::to_string(c) + " not in graph");
  if (g.degree(c) != 2) {
    throw PreconditionError("smoothing needs a degree-2 vertex; vertex " + std::to_string(c) + " has degree " +
                            std::to_string(g.degree(c)));
  }
  const VertexSet nb = g.neighbors(c);
  const int d = nb.first();
  const int e = (nb - VertexSet::single(d)).first();
  Deletion del = delete_vertices(g, VertexSet::single(c));
  const int nd = d < c ? d : d - 1;
  const int ne = e < c ? e : e - 1;
  del.graph.add_edge(nd, ne);
  return del.graph;
}

namespace {

// Working state for reduce/replay: the current graph over original labels,
// with `alive` marking vertices not yet removed.
struct ReductionState {
  Graph g;
  VertexSet alive;

  void apply(const ReductionStep& step) {
    const int v = step.vertex;
    if (!alive.contains(v)) throw PreconditionError("reduction step on removed vertex");
    const int deg = g.degree(v);
    switch (step.kind) {
      case ReductionStep::Kind::kDeleteIsolated:
        if (deg != 0) throw PreconditionError("delete-isolated on vertex of degree " + std::to_string(deg));
        break;
      case ReductionStep::Kind::kDeleteLeaf:
        if (deg != 1) throw PreconditionError("delete-leaf on vertex of degree " + std::to_string(deg));
        g.remove_edge(v, g.neighbors(v).first());
        break;
      case ReductionStep::Kind::kSmooth: {
        if (deg != 2) throw PreconditionError("smooth on vertex of degree " + std::to_string(deg));
        const VertexSet nb = g.neighbors(v);
        if (!nb.contains(step.d) || !nb.contains(step.e)) throw PreconditionError("smooth step neighbours mismatch");
        g.remove_edge(v, step.d);
        g.remove_edge(v, step.e);
        g.add_edge(step.d, step.e);
        break;
      }
    }
    alive.erase(v);
  }

  Reduction finish(ReductionTrace trace) const {
    Deletion del = delete_vertices(g, g.vertices() - alive);
    return Reduction{std::move(del.graph), std::move(trace), std::move(del.original)};
  }
};

}  // namespace

Reduction reduce(const Graph& g) {
  ReductionState state{g, g.vertices()};
  ReductionTrace trace;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v : state.alive) {
      const int deg = state.g.degree(v);
      if (deg >= 3) continue;
      ReductionStep step{};
      step.vertex = v;
      if (deg == 0) {
        step.kind = ReductionStep::Kind::kDeleteIsolated;
      } else if (deg == 1) {
        step.kind = ReductionStep::Kind::kDeleteLeaf;
      } else {
        const VertexSet nb = state.g.neighbors(v);
        step.kind = ReductionStep::Kind::kSmooth;
        step.d = nb.first();
        step.e = (nb - VertexSet::single(step.d)).first();
        step.simplified = state.g.adjacent(step.d, step.e);
      }
      state.apply(step);
      trace.steps.push_back(step);
      progress = true;
      break;
    }
  }
  return state.finish(std::move(trace));
}

Reduction replay(const Graph& g, const ReductionTrace& trace) {
  ReductionState state{g, g.vertices()};
  for (const auto& step : trace.steps) state.apply(step);
  return state.finish(trace);
}

Graph triangle_y(const Graph& g, int a, int b, int c) {
  for (int v : {a, b, c}) {
    if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " not in graph");
  }
  if (a == b || b == c || a == c || !g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(a, c)) {
    throw PreconditionError("vertices " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                            " do not form a triangle");
  }
  if (g.order() >= kMaxVertices) throw SizeError("triangle-Y move would exceed 32 vertices");
  Graph out(g.order() + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  out.remove_edge(a, b);
  out.remove_edge(b, c);
  out.remove_edge(a, c);
  const int y = g.order();
  out.add_edge(y, a);
  out.add_edge(y, b);
  out.add_edge(y, c);
  return out;
}

Graph y_triangle(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " not in graph");
  if (g.degree(v) != 3) {
    throw PreconditionError("Y-triangle move needs a degree-3 vertex; vertex " + std::to_string(v) + " has degree " +
                            std::to_string(g.degree(v)));
  }
  const std::vector<int> nb = g.neighbors(v).to_vector();
  Graph out = g;
  out.add_edge(nb[0], nb[1]);
  out.add_edge(nb[1], nb[2]);
  out.add_edge(nb[0], nb[2]);
  return delete_vertices(out, VertexSet::single(v)).graph;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (auto [a, b] : g.edges()) {
    const VertexSet common = g.neighbors(a) & g.neighbors(b);
    for (int c : common) {
      if (c > b) out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace apexis
