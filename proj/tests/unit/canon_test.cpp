#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "apexis/canon.hpp"

using namespace apexis;

namespace {

// Lexicographically largest adjacency over all relabelings.
Graph::Rows brute_canon(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  Graph::Rows best{};
  bool first = true;
  do {
    const Graph h = relabel(g, perm);
    if (first || h.rows() > best) best = h.rows();
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<int> shuffled(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("class counts on up to five vertices match a permutation oracle") {
  const int expected[] = {1, 1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n) {
    std::set<Graph::Rows> brute;
    std::set<CanonicalKey> fast;
    const int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      Graph g(n);
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if ((mask >> bit) & 1) g.add_edge(u, v);
      brute.insert(brute_canon(g));
      fast.insert(canonical_key(g));
    }
    CHECK(brute.size() == static_cast<std::size_t>(expected[n]));
    CHECK(fast.size() == brute.size());
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 15;
    const Graph g = random_graph(n, 0.2 + 0.05 * (trial % 10), rng);
    const Graph h = relabel(g, shuffled(n, rng));
    const CanonicalForm fg = canonical_form(g);
    CHECK(fg.key == canonical_key(h));
    CHECK(relabel(g, fg.labeling) == fg.key.graph());
    const auto iso = are_isomorphic(g, h);
    REQUIRE(iso);
    CHECK(relabel(g, *iso) == h);
  }
}

TEST_CASE("symmetric graphs") {
  std::mt19937 rng(11);
  for (const Graph& g : {petersen(), complete(10), complete_bipartite(5, 5), cycle(20), Graph(12),
                         disjoint_union(complete(4), complete(4)), disjoint_union(cycle(6), cycle(6))}) {
    CHECK(canonical_key(g) == canonical_key(relabel(g, shuffled(g.order(), rng))));
  }
  CHECK_FALSE(are_isomorphic(cycle(6), disjoint_union(complete(3), complete(3))));
}
