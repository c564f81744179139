#include "apexis/multigraph.hpp"

#include <algorithm>

namespace apexis {

Multigraph::Multigraph(int order) : order_(order) {
  if (order < 0 || order > kMaxVertices) throw SizeError("multigraph order out of range");
}

Multigraph Multigraph::from_graph(const Graph& g) {
  Multigraph m(g.order());
  for (auto [u, v] : g.edges()) m.add_edge(u, v);
  return m;
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < order_; ++u) d += (u == v ? 2 : 1) * mult_[v][u];
  return d;
}

int Multigraph::edge_count() const {
  int total = 0;
  for (int u = 0; u < order_; ++u)
    for (int v = u; v < order_; ++v) total += mult_[u][v];
  return total;
}

int Multigraph::loop_count() const {
  int total = 0;
  for (int v = 0; v < order_; ++v) total += mult_[v][v];
  return total;
}

int Multigraph::min_degree() const {
  int best = order_ == 0 ? 0 : 1 << 20;
  for (int v = 0; v < order_; ++v) best = std::min(best, degree(v));
  return best;
}

void Multigraph::add_edge(int u, int v, int count) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) throw DomainError("multigraph edge endpoint out of range");
  mult_[u][v] += count;
  if (u != v) mult_[v][u] += count;
}

void Multigraph::remove_edge(int u, int v) {
  if (mult_[u][v] == 0) throw PreconditionError("removing absent multigraph edge");
  --mult_[u][v];
  if (u != v) --mult_[v][u];
}

Graph Multigraph::simple() const {
  Graph g(order_);
  for (int u = 0; u < order_; ++u)
    for (int v = u + 1; v < order_; ++v)
      if (mult_[u][v] > 0) g.add_edge(u, v);
  return g;
}

MultigraphSimplification multigraph_simplify(const Multigraph& input) {
  Multigraph m = input;
  std::vector<bool> alive(m.order(), true);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < m.order() && !progress; ++v) {
      if (!alive[v]) continue;
      const int deg = m.degree(v);
      if (deg >= 3) continue;
      if (deg == 2 && m.multiplicity(v, v) == 1) continue;  // lone loop: nothing to smooth
      std::vector<int> ends;
      for (int u = 0; u < m.order(); ++u) {
        if (u == v) continue;
        for (int k = 0; k < m.multiplicity(v, u); ++k) ends.push_back(u);
      }
      for (int u : ends) m.remove_edge(v, u);
      if (deg == 2) m.add_edge(ends[0], ends[1]);  // ends[0] == ends[1] makes a loop
      alive[v] = false;
      progress = true;
    }
  }
  MultigraphSimplification out;
  std::vector<int> index(m.order(), -1);
  for (int v = 0; v < m.order(); ++v) {
    if (!alive[v]) continue;
    index[v] = static_cast<int>(out.original.size());
    out.original.push_back(v);
  }
  out.result = Multigraph(static_cast<int>(out.original.size()));
  for (int u = 0; u < m.order(); ++u) {
    if (!alive[u]) continue;
    for (int v = u; v < m.order(); ++v) {
      if (alive[v] && m.multiplicity(u, v) > 0) out.result.add_edge(index[u], index[v], m.multiplicity(u, v));
    }
  }
  return out;
}

}  // namespace apexis
