#include "apexis/canon.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace apexis {

std::uint64_t CanonicalKey::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(order);
  for (int i = 0; i < order; ++i) {
    h ^= rows[i];
    h *= 1099511628211ull;
  }
  return h;
}

bool CanonicalKey::operator==(const CanonicalKey& other) const {
  return order == other.order && std::memcmp(rows.data(), other.rows.data(), sizeof(std::uint32_t) * order) == 0;
}

std::strong_ordering CanonicalKey::operator<=>(const CanonicalKey& other) const {
  if (auto c = order <=> other.order; c != 0) return c;
  for (int i = 0; i < order; ++i) {
    if (auto c = rows[i] <=> other.rows[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

using Rows = Graph::Rows;
using Perm = std::array<std::int8_t, kMaxVertices>;

struct Partition {
  std::array<std::uint32_t, kMaxVertices> cells{};
  int count = 0;
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : adj_(g.rows()), n_(g.order()) {}

  CanonicalForm run() {
    CanonicalForm out;
    out.key.order = n_;
    if (n_ == 0) return out;
    Partition root;
    root.cells[0] = VertexSet::range(n_).bits();
    root.count = 1;
    std::uint32_t queue[1] = {root.cells[0]};
    refine(root, queue, 1);
    visit(0, root);
    out.key.rows = best_rows_;
    out.labeling.resize(n_);
    for (int i = 0; i < n_; ++i) out.labeling[best_lab_[i]] = i;
    return out;
  }

 private:
  void refine(Partition& p, const std::uint32_t* initial, int initial_count) {
    std::uint32_t queue[4 * kMaxVertices + 8];
    int head = 0;
    int tail = 0;
    for (int i = 0; i < initial_count; ++i) queue[tail++] = initial[i];
    while (head < tail && p.count < n_) {
      const std::uint32_t splitter = queue[head++];
      for (int ci = 0; ci < p.count; ++ci) {
        const std::uint32_t cell = p.cells[ci];
        if ((cell & (cell - 1)) == 0) continue;
        std::uint32_t buckets[kMaxVertices + 1] = {};
        std::uint32_t used = 0;  // bitmask over counts 0..31
        bool overflow = false;
        for (std::uint32_t rest = cell; rest; rest &= rest - 1) {
          const int v = std::countr_zero(rest);
          const int k = std::popcount(adj_[v] & splitter);
          buckets[k] |= std::uint32_t{1} << v;
          if (k < 32) {
            used |= std::uint32_t{1} << k;
          } else {
            overflow = true;
          }
        }
        const int pieces = std::popcount(used) + (overflow ? 1 : 0);
        if (pieces == 1) continue;
        // Shift the tail right to make room, then write pieces in ascending count order.
        for (int j = p.count - 1; j > ci; --j) p.cells[j + pieces - 1] = p.cells[j];
        int w = ci;
        for (std::uint32_t u = used; u; u &= u - 1) {
          const std::uint32_t piece = buckets[std::countr_zero(u)];
          p.cells[w++] = piece;
          if (tail < static_cast<int>(std::size(queue))) queue[tail++] = piece;
        }
        if (overflow) {
          p.cells[w++] = buckets[32];
          if (tail < static_cast<int>(std::size(queue))) queue[tail++] = buckets[32];
        }
        p.count += pieces - 1;
        ci += pieces - 1;
      }
    }
  }

  void visit(int level, const Partition& p) {
    if (p.count == n_) {
      leaf(p);
      return;
    }
    int target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    const std::uint32_t cell = p.cells[target];
    std::uint32_t explored = 0;
    for (std::uint32_t rest = cell; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (explored && equivalent_to_explored(level, v, explored)) continue;
      Partition child = p;
      for (int j = child.count - 1; j > target; --j) child.cells[j + 1] = child.cells[j];
      child.cells[target] = std::uint32_t{1} << v;
      child.cells[target + 1] = cell & ~(std::uint32_t{1} << v);
      ++child.count;
      const std::uint32_t splitter = std::uint32_t{1} << v;
      refine(child, &splitter, 1);
      path_[level] = static_cast<std::int8_t>(v);
      visit(level + 1, child);
      explored |= std::uint32_t{1} << v;
      if (jump_level_ >= 0) {
        if (jump_level_ < level) return;
        jump_level_ = -1;
      }
    }
  }

  bool equivalent_to_explored(int level, int v, std::uint32_t explored) {
    std::array<std::int8_t, kMaxVertices> parent;
    for (int i = 0; i < n_; ++i) parent[i] = static_cast<std::int8_t>(i);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const Perm& g : generators_) {
      bool fixes = true;
      for (int j = 0; j < level && fixes; ++j) fixes = g[path_[j]] == path_[j];
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x);
        const int b = find(g[x]);
        if (a != b) parent[std::max(a, b)] = static_cast<std::int8_t>(std::min(a, b));
      }
    }
    if (!any) return false;
    const int root = find(v);
    for (std::uint32_t rest = explored; rest; rest &= rest - 1) {
      if (find(std::countr_zero(rest)) == root) return true;
    }
    return false;
  }

  void leaf(const Partition& p) {
    Perm lab{};
    std::array<int, kMaxVertices> inv{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = static_cast<std::int8_t>(std::countr_zero(p.cells[i]));
      inv[lab[i]] = i;
    }
    Rows rows{};
    for (int i = 0; i < n_; ++i) {
      std::uint32_t r = 0;
      for (std::uint32_t rest = adj_[lab[i]]; rest; rest &= rest - 1) r |= std::uint32_t{1} << inv[std::countr_zero(rest)];
      rows[i] = r;
    }
    if (!have_first_) {
      have_first_ = true;
      first_rows_ = best_rows_ = rows;
      first_lab_ = best_lab_ = lab;
      first_path_ = path_;
      return;
    }
    if (std::memcmp(rows.data(), first_rows_.data(), sizeof(std::uint32_t) * n_) == 0) {
      record_automorphism(lab, first_lab_);
      int d = 0;
      while (path_[d] == first_path_[d]) ++d;
      jump_level_ = d;
      return;
    }
    const int cmp = compare(rows, best_rows_);
    if (cmp == 0) {
      record_automorphism(lab, best_lab_);
    } else if (cmp > 0) {
      best_rows_ = rows;
      best_lab_ = lab;
    }
  }

  int compare(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  void record_automorphism(const Perm& from, const Perm& to) {
    if (generators_.size() >= 64) return;
    Perm g{};
    for (int i = 0; i < n_; ++i) g[from[i]] = to[i];
    generators_.push_back(g);
  }

  const Rows& adj_;
  int n_;
  Perm path_{};
  bool have_first_ = false;
  Rows first_rows_{};
  Perm first_lab_{};
  Perm first_path_{};
  Rows best_rows_{};
  Perm best_lab_{};
  std::vector<Perm> generators_;
  int jump_level_ = -1;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canonizer(g).run(); }

CanonicalKey canonical_key(const Graph& g) { return Canonizer(g).run().key; }

Graph canonical_graph(const Graph& g) { return canonical_key(g).graph(); }

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  const CanonicalForm fg = canonical_form(g);
  const CanonicalForm fh = canonical_form(h);
  if (!(fg.key == fh.key)) return std::nullopt;
  std::vector<int> by_index(g.order());
  for (int w = 0; w < h.order(); ++w) by_index[fh.labeling[w]] = w;
  std::vector<int> perm(g.order());
  for (int v = 0; v < g.order(); ++v) perm[v] = by_index[fg.labeling[v]];
  return perm;
}

}  // namespace apexis
