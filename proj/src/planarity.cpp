#include "apexis/planarity.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace apexis {

namespace {

using Rows = Graph::Rows;

struct Block {
  VertexSet vertices;
  // Directed face cycles; empty for a single-edge block.
  std::vector<std::vector<int>> faces;
};

// Biconnected components (vertex sets) of the graph restricted to `alive`.
std::vector<VertexSet> biconnected_blocks(const Rows& adj, VertexSet alive) {
  std::array<int, kMaxVertices> disc{};
  std::array<int, kMaxVertices> low{};
  disc.fill(-1);
  int timer = 0;
  std::vector<Edge> stack;
  std::vector<VertexSet> blocks;

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    for (int v : VertexSet(adj[u]) & alive) {
      if (disc[v] == -1) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          VertexSet block;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block.insert(a);
            block.insert(b);
            if (a == u && b == v) break;
          }
          blocks.push_back(block);
        }
      } else if (v != parent && disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (int v : alive) {
    if (disc[v] == -1) dfs(v, -1);
  }
  return blocks;
}

VertexSet face_mask(const std::vector<int>& face) {
  VertexSet m;
  for (int v : face) m.insert(v);
  return m;
}

// Path-addition embedding of a biconnected block with at least 3 vertices.
// Returns false when some fragment has no admissible face.
bool embed_block(const Rows& graph_adj, VertexSet block, std::vector<std::vector<int>>* faces_out) {
  Rows adj{};
  int block_edges = 0;
  for (int v : block) {
    adj[v] = graph_adj[v] & block.bits();
    block_edges += VertexSet(adj[v]).size();
  }
  block_edges /= 2;
  const int nb = block.size();
  if (block_edges > 3 * nb - 6) return false;

  // Initial cycle through r and its first neighbour s.
  const int r = block.first();
  const int s = VertexSet(adj[r]).first();
  std::array<int, kMaxVertices> prev{};
  prev.fill(-1);
  std::vector<int> queue{s};
  VertexSet seen{s};
  int last = -1;
  for (std::size_t qi = 0; qi < queue.size() && last < 0; ++qi) {
    const int u = queue[qi];
    for (int w : VertexSet(adj[u])) {
      if (w == r) {
        if (u != s) {
          last = u;
          break;
        }
        continue;
      }
      if (seen.contains(w)) continue;
      seen.insert(w);
      prev[w] = u;
      queue.push_back(w);
    }
  }
  std::vector<int> first_cycle{r};
  {
    std::vector<int> back;
    for (int u = last; u != -1; u = prev[u]) back.push_back(u);
    // back runs last .. s; the cycle is r, s, ..., last.
    first_cycle.insert(first_cycle.end(), back.rbegin(), back.rend());
  }

  std::vector<std::vector<int>> faces;
  faces.push_back(first_cycle);
  faces.emplace_back(first_cycle.rbegin(), first_cycle.rend());
  std::vector<VertexSet> masks{face_mask(first_cycle), face_mask(first_cycle)};

  Rows hadj{};
  VertexSet hv;
  for (std::size_t i = 0; i < first_cycle.size(); ++i) {
    const int u = first_cycle[i];
    const int v = first_cycle[(i + 1) % first_cycle.size()];
    hadj[u] |= std::uint32_t{1} << v;
    hadj[v] |= std::uint32_t{1} << u;
    hv.insert(u);
  }
  int embedded_edges = static_cast<int>(first_cycle.size());

  struct Fragment {
    VertexSet attachments;
    VertexSet interior;  // empty for a chord
    int chord_u = -1;
    int chord_v = -1;
  };

  while (embedded_edges < block_edges) {
    std::vector<Fragment> fragments;
    for (int u : hv) {
      for (int v : VertexSet(adj[u] & ~hadj[u]) & hv) {
        if (v > u) fragments.push_back(Fragment{VertexSet{u, v}, {}, u, v});
      }
    }
    VertexSet rest = block - hv;
    while (!rest.empty()) {
      VertexSet comp = VertexSet::single(rest.first());
      VertexSet frontier = comp;
      while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= VertexSet(adj[v]);
        next = (next & rest) - comp;
        comp |= next;
        frontier = next;
      }
      VertexSet attach;
      for (int v : comp) attach |= VertexSet(adj[v]) & hv;
      fragments.push_back(Fragment{attach, comp});
      rest -= comp;
    }

    int chosen = -1;
    int chosen_face = -1;
    for (std::size_t f = 0; f < fragments.size(); ++f) {
      int count = 0;
      int face = -1;
      for (std::size_t k = 0; k < faces.size(); ++k) {
        if (fragments[f].attachments.is_subset_of(masks[k])) {
          ++count;
          if (face < 0) face = static_cast<int>(k);
        }
      }
      if (count == 0) return false;
      if (count == 1) {
        chosen = static_cast<int>(f);
        chosen_face = face;
        break;
      }
      if (chosen < 0) {
        chosen = static_cast<int>(f);
        chosen_face = face;
      }
    }

    const Fragment& frag = fragments[chosen];
    std::vector<int> path;
    if (frag.interior.empty()) {
      path = {frag.chord_u, frag.chord_v};
    } else {
      const int a = frag.attachments.first();
      const int b = (frag.attachments - VertexSet::single(a)).first();
      std::array<int, kMaxVertices> from{};
      from.fill(-1);
      std::vector<int> q;
      VertexSet visited;
      for (int v : VertexSet(adj[a]) & frag.interior) {
        q.push_back(v);
        visited.insert(v);
      }
      int end = -1;
      for (std::size_t qi = 0; qi < q.size(); ++qi) {
        const int u = q[qi];
        if ((adj[u] >> b) & 1u) {
          end = u;
          break;
        }
        for (int w : (VertexSet(adj[u]) & frag.interior) - visited) {
          visited.insert(w);
          from[w] = u;
          q.push_back(w);
        }
      }
      std::vector<int> mid;
      for (int u = end; u != -1; u = from[u]) mid.push_back(u);
      path.push_back(a);
      path.insert(path.end(), mid.rbegin(), mid.rend());
      path.push_back(b);
    }

    const std::vector<int> face = faces[chosen_face];
    const int fa = path.front();
    const int fb = path.back();
    const int len = static_cast<int>(face.size());
    const int i = static_cast<int>(std::find(face.begin(), face.end(), fa) - face.begin());
    const int j = static_cast<int>(std::find(face.begin(), face.end(), fb) - face.begin());
    std::vector<int> f1;
    std::vector<int> f2;
    for (int k = i;; k = (k + 1) % len) {
      f1.push_back(face[k]);
      if (k == j) break;
    }
    for (int k = static_cast<int>(path.size()) - 2; k >= 1; --k) f1.push_back(path[k]);
    for (int k = j;; k = (k + 1) % len) {
      f2.push_back(face[k]);
      if (k == i) break;
    }
    for (std::size_t k = 1; k + 1 < path.size(); ++k) f2.push_back(path[k]);
    faces[chosen_face] = f1;
    masks[chosen_face] = face_mask(f1);
    faces.push_back(f2);
    masks.push_back(face_mask(f2));

    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      hadj[path[k]] |= std::uint32_t{1} << path[k + 1];
      hadj[path[k + 1]] |= std::uint32_t{1} << path[k];
      hv.insert(path[k]);
    }
    hv.insert(path.back());
    embedded_edges += static_cast<int>(path.size()) - 1;
  }
  if (faces_out) *faces_out = std::move(faces);
  return true;
}

// Drops degree <= 1 vertices and smooths degree-2 vertices in place.
// Planarity is unchanged by each step.
VertexSet prune_low_degree(Rows& adj, VertexSet alive) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v : alive) {
      const VertexSet nb = VertexSet(adj[v]);
      const int deg = nb.size();
      if (deg >= 3) continue;
      for (int u : nb) adj[u] &= ~(std::uint32_t{1} << v);
      if (deg == 2) {
        const int d = nb.first();
        const int e = (nb - VertexSet::single(d)).first();
        adj[d] |= std::uint32_t{1} << e;
        adj[e] |= std::uint32_t{1} << d;
      }
      adj[v] = 0;
      alive.erase(v);
      progress = true;
    }
  }
  return alive;
}

}  // namespace

std::vector<std::vector<int>> PlanarEmbedding::faces() const {
  const int n = static_cast<int>(rotation.size());
  std::map<Edge, bool> used;
  std::vector<std::vector<int>> out;
  auto succ = [&](int v, int u) {
    const auto& rot = rotation[v];
    const auto it = std::find(rot.begin(), rot.end(), u);
    const auto next = std::next(it) == rot.end() ? rot.begin() : std::next(it);
    return *next;
  };
  for (int u = 0; u < n; ++u) {
    for (int v : rotation[u]) {
      if (used[{u, v}]) continue;
      std::vector<int> face;
      int a = u;
      int b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        face.push_back(a);
        const int c = succ(b, a);
        a = b;
        b = c;
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

bool verify_embedding(const Graph& g, const PlanarEmbedding& embedding) {
  if (static_cast<int>(embedding.rotation.size()) != g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    const auto& rot = embedding.rotation[v];
    VertexSet seen;
    for (int u : rot) {
      if (u < 0 || u >= g.order() || seen.contains(u)) return false;
      seen.insert(u);
    }
    if (seen != g.neighbors(v)) return false;
  }
  int face_count = static_cast<int>(embedding.faces().size());
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) ++face_count;
  }
  const int components = static_cast<int>(g.components().size());
  return g.order() - g.edge_count() + face_count == 2 * components;
}

bool verify_minor_model(const Graph& host, const MinorModel& model) {
  const int p = model.pattern.order();
  if (static_cast<int>(model.branch_sets.size()) != p) return false;
  VertexSet used;
  for (const VertexSet& b : model.branch_sets) {
    if (b.empty() || !b.is_subset_of(host.vertices()) || b.intersects(used)) return false;
    used |= b;
    if (!induced_subgraph(host, b).connected()) return false;
  }
  const auto pattern_edges = model.pattern.edges();
  if (pattern_edges.size() != model.realization.size()) return false;
  for (std::size_t k = 0; k < pattern_edges.size(); ++k) {
    auto [p1, p2] = pattern_edges[k];
    auto [x, y] = model.realization[k];
    if (x < 0 || y < 0 || x >= host.order() || y >= host.order() || !host.adjacent(x, y)) return false;
    const bool forward = model.branch_sets[p1].contains(x) && model.branch_sets[p2].contains(y);
    const bool backward = model.branch_sets[p1].contains(y) && model.branch_sets[p2].contains(x);
    if (!forward && !backward) return false;
  }
  return true;
}

bool planar(const Graph& g) {
  const int n = g.order();
  const int m = g.edge_count();
  if (m <= 8 || n <= 4) return true;
  if (m > 3 * n - 6) return false;
  Rows adj = g.rows();
  const VertexSet alive = prune_low_degree(adj, g.vertices());
  if (alive.size() <= 4) return true;
  for (VertexSet block : biconnected_blocks(adj, alive)) {
    if (block.size() <= 4) continue;
    if (!embed_block(adj, block, nullptr)) return false;
  }
  return true;
}

std::optional<PlanarEmbedding> planar_embedding(const Graph& g) {
  const Rows& adj = g.rows();
  std::vector<std::vector<std::vector<int>>> per_vertex(g.order());  // per vertex, one rotation per block
  for (VertexSet block : biconnected_blocks(adj, g.vertices())) {
    if (block.size() == 2) {
      const int u = block.first();
      const int v = (block - VertexSet::single(u)).first();
      per_vertex[u].push_back({v});
      per_vertex[v].push_back({u});
      continue;
    }
    std::vector<std::vector<int>> faces;
    if (!embed_block(adj, block, &faces)) return std::nullopt;
    std::map<Edge, int> succ;  // (v, u) -> w : w follows u at v
    for (const auto& face : faces) {
      const std::size_t len = face.size();
      for (std::size_t k = 0; k < len; ++k) {
        const int u = face[k];
        const int v = face[(k + 1) % len];
        const int w = face[(k + 2) % len];
        succ[{v, u}] = w;
      }
    }
    for (int v : block) {
      const int start = (g.neighbors(v) & block).first();
      std::vector<int> rot{start};
      for (int u = succ.at({v, start}); u != start; u = succ.at({v, u})) rot.push_back(u);
      per_vertex[v].push_back(std::move(rot));
    }
  }
  PlanarEmbedding emb;
  emb.rotation.resize(g.order());
  for (int v = 0; v < g.order(); ++v) {
    for (const auto& part : per_vertex[v]) emb.rotation[v].insert(emb.rotation[v].end(), part.begin(), part.end());
  }
  return emb;
}

MinorModel kuratowski_model(const Graph& g) {
  if (planar(g)) throw PreconditionError("graph is planar; no Kuratowski obstruction");
  Graph h = g;
  for (auto [u, v] : g.edges()) {
    h.remove_edge(u, v);
    if (planar(h)) h.add_edge(u, v);
  }
  VertexSet branch;
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) >= 3) branch.insert(v);
  }
  const std::vector<int> branch_list = branch.to_vector();
  std::array<int, kMaxVertices> slot{};
  slot.fill(-1);
  for (std::size_t i = 0; i < branch_list.size(); ++i) slot[branch_list[i]] = static_cast<int>(i);

  std::vector<VertexSet> sets(branch_list.size());
  for (std::size_t i = 0; i < branch_list.size(); ++i) sets[i] = VertexSet::single(branch_list[i]);
  struct Link {
    int a;
    int b;
    Edge realized;
  };
  std::vector<Link> links;
  for (int b : branch_list) {
    for (int x : h.neighbors(b)) {
      int prev = b;
      int cur = x;
      std::vector<int> interior;
      while (!branch.contains(cur)) {
        interior.push_back(cur);
        const int next = (h.neighbors(cur) - VertexSet::single(prev)).first();
        prev = cur;
        cur = next;
      }
      if (b < cur) {
        for (int v : interior) sets[slot[b]].insert(v);
        links.push_back({slot[b], slot[cur], {prev, cur}});
      }
    }
  }

  MinorModel model;
  std::vector<int> pattern_of(branch_list.size());
  if (branch_list.size() == 5) {
    model.pattern = complete(5);
    for (int i = 0; i < 5; ++i) pattern_of[i] = i;
  } else {
    if (branch_list.size() != 6) throw PreconditionError("minimal non-planar subgraph is not a Kuratowski subdivision");
    model.pattern = complete_bipartite(3, 3);
    std::vector<int> colour(6, -1);
    colour[0] = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (const Link& l : links) {
        if (colour[l.a] >= 0 && colour[l.b] < 0) {
          colour[l.b] = 1 - colour[l.a];
          changed = true;
        } else if (colour[l.b] >= 0 && colour[l.a] < 0) {
          colour[l.a] = 1 - colour[l.b];
          changed = true;
        }
      }
    }
    int next[2] = {0, 3};
    for (int i = 0; i < 6; ++i) pattern_of[i] = next[colour[i]]++;
  }
  model.branch_sets.resize(branch_list.size());
  for (std::size_t i = 0; i < branch_list.size(); ++i) model.branch_sets[pattern_of[i]] = sets[i];
  for (auto [p, q] : model.pattern.edges()) {
    for (const Link& l : links) {
      const int a = pattern_of[l.a];
      const int b = pattern_of[l.b];
      if ((a == p && b == q) || (a == q && b == p)) {
        model.realization.push_back(l.realized);
        break;
      }
    }
  }
  return model;
}

PlanarityCertificate is_planar(const Graph& g) {
  if (auto emb = planar_embedding(g)) return *std::move(emb);
  return kuratowski_model(g);
}

int nonplanar_edge_lower_bound(int n) {
  if (n < 6) throw DomainError("edge lower bound needs n >= 6, got " + std::to_string(n));
  return n + 3 - (n - 6) / 2;
}

namespace {

class MinorSearch {
 public:
  MinorSearch(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
    const int p = pattern.order();
    // Order pattern vertices: most placed neighbours first, then degree, then index.
    std::vector<bool> placed(p, false);
    for (int k = 0; k < p; ++k) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < p; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int u : pattern.neighbors(v)) links += placed[u] ? 1 : 0;
        if (best < 0 || links > best_links || (links == best_links && pattern.degree(v) > pattern.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
    branch_.assign(p, VertexSet{});
    slack_ = host.edge_count() - pattern.edge_count();
  }

  std::optional<MinorModel> run() {
    if (!place(0, VertexSet{}, 0)) return std::nullopt;
    MinorModel model;
    model.pattern = pattern_;
    model.branch_sets = branch_;
    for (auto [p, q] : pattern_.edges()) {
      bool found = false;
      for (int x : branch_[p]) {
        const VertexSet across = host_.neighbors(x) & branch_[q];
        if (!across.empty()) {
          model.realization.emplace_back(x, across.first());
          found = true;
          break;
        }
      }
      if (!found) throw Error("minor search produced an unrealized pattern edge");
    }
    return model;
  }

 private:
  bool place(int k, VertexSet used, int internal_edges) {
    const int p = static_cast<int>(order_.size());
    if (k == p) return true;
    const int pv = order_[k];
    VertexSet placed_nbrs_sets;
    std::vector<int> placed_nbrs;
    int unplaced_nbrs = 0;
    for (int u : pattern_.neighbors(pv)) {
      if (is_placed(u, k)) {
        placed_nbrs.push_back(u);
      } else {
        ++unplaced_nbrs;
      }
    }
    const VertexSet free = host_.vertices() - used;
    const int remaining_after = p - k - 1;
    const int max_size = free.size() - remaining_after;
    if (max_size < 1) return false;

    VertexSet seeds = free;
    if (!placed_nbrs.empty()) seeds = host_.neighbors(branch_[placed_nbrs.front()]) & free;

    std::vector<VertexSet> candidates;
    VertexSet excluded;
    for (int s : seeds) {
      enumerate_connected(VertexSet::single(s), (host_.neighbors(s) & free) - excluded, excluded | used, free, max_size,
                          candidates);
      excluded.insert(s);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](VertexSet a, VertexSet b) { return a.size() < b.size(); });

    for (VertexSet b : candidates) {
      const int internal = internal_edges + b.size() - 1;
      if (internal > slack_) continue;
      const VertexSet nb = host_.neighbors(b);
      bool ok = true;
      for (int u : placed_nbrs) {
        if (!nb.intersects(branch_[u])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const VertexSet used_after = used | b;
      const VertexSet free_after = host_.vertices() - used_after;
      if ((nb & free_after).size() < unplaced_nbrs) continue;
      if (free_after.size() < remaining_after) continue;
      branch_[pv] = b;
      // Every placed vertex still needs distinct free neighbours for its unplaced pattern neighbours.
      for (int j = 0; j <= k && ok; ++j) {
        const int q = order_[j];
        int need = 0;
        for (int u : pattern_.neighbors(q)) need += is_placed(u, k + 1) ? 0 : 1;
        if (need > 0 && (host_.neighbors(branch_[q]) & free_after).size() < need) ok = false;
      }
      if (ok && place(k + 1, used_after, internal)) return true;
      branch_[pv] = VertexSet{};
    }
    return false;
  }

  bool is_placed(int pattern_vertex, int k) const {
    for (int j = 0; j < k; ++j) {
      if (order_[j] == pattern_vertex) return true;
    }
    return false;
  }

  // Connected sets containing `current`, grown from `frontier`, avoiding `forbidden`.
  void enumerate_connected(VertexSet current, VertexSet frontier, VertexSet forbidden, VertexSet free, int max_size,
                           std::vector<VertexSet>& out) const {
    out.push_back(current);
    grow(current, frontier - forbidden, forbidden, free, max_size, out);
  }

  void grow(VertexSet current, VertexSet frontier, VertexSet forbidden, VertexSet free, int max_size,
            std::vector<VertexSet>& out) const {
    if (frontier.empty() || current.size() >= max_size) return;
    const int v = frontier.first();
    const VertexSet with = current | VertexSet::single(v);
    out.push_back(with);
    grow(with, ((frontier | (host_.neighbors(v) & free)) - with) - forbidden, forbidden, free, max_size, out);
    grow(current, frontier - VertexSet::single(v), forbidden | VertexSet::single(v), free, max_size, out);
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<int> order_;
  std::vector<VertexSet> branch_;
  int slack_ = 0;
};

}  // namespace

std::optional<MinorModel> has_minor(const Graph& g, const Graph& pattern) {
  if (pattern.order() > kMaxPatternOrder) {
    throw CapacityError("minor pattern has " + std::to_string(pattern.order()) + " vertices; limit is " +
                        std::to_string(kMaxPatternOrder));
  }
  if (pattern.order() > g.order() || pattern.edge_count() > g.edge_count()) return std::nullopt;
  if (pattern.order() == 0) return MinorModel{pattern, {}, {}};
  return MinorSearch(g, pattern).run();
}

}  // namespace apexis
