#include <doctest.h>

#include <set>

#include "apexis/canon.hpp"
#include "apexis/generate.hpp"

using namespace apexis;

TEST_CASE("graph counts by order") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(generate({.order = n}).size() == expected[n]);
}

TEST_CASE("generated classes are distinct and canonical") {
  std::set<CanonicalKey> keys;
  for (const Graph& g : generate({.order = 7})) {
    CHECK(canonical_graph(g) == g);
    keys.insert(canonical_key(g));
  }
  CHECK(keys.size() == 1044);
}

TEST_CASE("edge and degree filters match filtering the full list") {
  for (int n = 5; n <= 7; ++n) {
    for (int d = 0; d <= 3; ++d) {
      std::size_t expected = 0;
      for (const Graph& g : generate({.order = n}))
        expected += g.edge_count() >= n && g.edge_count() <= n + 4 && g.min_degree() >= d;
      const auto got = generate({.order = n, .min_edges = n, .max_edges = n + 4, .min_degree = d});
      CHECK(got.size() == expected);
    }
  }
}

TEST_CASE("sharding does not change the result") {
  const GenSpec spec{.order = 7, .max_edges = 12, .min_degree = 2};
  std::set<CanonicalKey> split;
  std::size_t total = 0;
  Generator gen(spec, 4);
  CHECK(gen.shard_count() > 2);
  for (std::size_t i = 0; i < gen.shard_count(); ++i) {
    gen.run_shard(i, [&](const Graph& g) {
      split.insert(canonical_key(g));
      ++total;
    });
  }
  CHECK(total == split.size());
  CHECK(total == generate(spec).size());
}

TEST_CASE("unsatisfiable specs produce nothing") {
  CHECK(generate({.order = 4, .max_edges = 5, .min_degree = 3}).empty());
  CHECK(generate({.order = 3, .min_edges = 4}).empty());
  CHECK_FALSE(GenSpec{.order = 5, .max_edges = 6, .min_degree = 3}.unsatisfiable_reason().empty());
}
