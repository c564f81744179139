#include <doctest.h>

#include <fstream>
#include <set>

#include <json.hpp>

#include "apexis/canon.hpp"
#include "apexis/catalog.hpp"
#include "apexis/graph6.hpp"

using namespace apexis;

namespace {

std::set<CanonicalKey> dfs_closure(const Graph& g, std::set<CanonicalKey>& seen) {
  if (!seen.insert(canonical_key(g)).second) return seen;
  for (const auto& t : triangles(g)) dfs_closure(triangle_y(g, t[0], t[1], t[2]), seen);
  return seen;
}

std::string read_line(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  return line;
}

}  // namespace

TEST_CASE("K7 family closure") {
  const auto& family = k7_family();
  REQUIRE(family.size() == 14);
  std::set<std::string> small;
  for (std::size_t i = 0; i < family.size(); ++i) {
    CHECK(family[i].graph.edge_count() == 21);
    CHECK(replay_provenance(family, static_cast<int>(i)) == family[i].graph);
    if (family[i].graph.order() <= 9) small.insert(family[i].name);
  }
  CHECK(small == std::set<std::string>{"K7", "H8", "F9", "H9"});

  std::set<CanonicalKey> bfs;
  for (const auto& m : family) bfs.insert(canonical_key(m.graph));
  std::set<CanonicalKey> dfs;
  dfs_closure(complete(7), dfs);
  CHECK(bfs == dfs);
}

TEST_CASE("H8 is a single triangle-Y move on K7, whichever triangle") {
  CHECK(are_isomorphic(h8(), triangle_y(complete(7), 2, 4, 6)));
  CHECK(are_isomorphic(h8(), triangle_y(complete(7), 0, 1, 5)));
}

TEST_CASE("nine-vertex members are told apart by their degree-6 vertices") {
  const Graph f = f9();
  const Graph h = h9();
  CHECK(f.degree_sequence() == std::vector<int>{6, 6, 5, 5, 5, 5, 4, 3, 3});
  CHECK(h.degree_sequence() == std::vector<int>{6, 5, 5, 5, 5, 5, 5, 3, 3});
  std::vector<int> six;
  for (int v = 0; v < 9; ++v)
    if (f.degree(v) == 6) six.push_back(v);
  REQUIRE(six.size() == 2);
  CHECK(f.adjacent(six[0], six[1]));
  for (int a = 0; a < 9; ++a) {
    if (h.degree(a) != 6) continue;
    for (int v = 0; v < 9; ++v)
      if (h.degree(v) == 5) CHECK(h.adjacent(a, v));
  }
}

TEST_CASE("E9 structure") {
  const Graph g = e9();
  CHECK(g.order() == 9);
  CHECK(g.edge_count() == 21);
  CHECK(g.min_degree() >= 3);
  CHECK(g.max_degree() == 5);
  bool twins = false;
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      twins |= g.degree(a) == 5 && g.degree(b) == 5 && !g.adjacent(a, b) && g.neighbors(a) == g.neighbors(b);
  CHECK(twins);
  const ApexResult r = is_l_apex(g, 2);
  REQUIRE(std::holds_alternative<NonApexVerdict>(r));
  CHECK(verify_non_apex_verdict(g, std::get<NonApexVerdict>(r)));
  CHECK(apex_pairs(g).empty());
  CHECK_FALSE(family_minor(g));
  for (const auto& m : k7_family()) {
    if (m.graph.order() <= 9) CHECK_FALSE(has_minor(g, m.graph));
  }
}

TEST_CASE("F10 reaches E9 by a Y-triangle move") {
  const auto f10 = f10_candidates();
  REQUIRE(f10.size() == 1);
  bool reached = false;
  for (int v = 0; v < 10; ++v)
    if (f10[0].degree(v) == 3) reached |= static_cast<bool>(are_isomorphic(y_triangle(f10[0], v), e9()));
  CHECK(reached);
}

TEST_CASE("lemma 2.5 shortcut on E9 never fires") {
  const Graph g = e9();
  int partitions = 0;
  for (int a = 0; a < 9; ++a) {
    for (int b = a + 1; b < 9; ++b) {
      const Deletion rest = delete_vertices(g, VertexSet{a, b});
      for (int c = 0; c < 7; ++c) {
        const auto p = genk33(rest.graph, c);
        if (!p) continue;
        ++partitions;
        auto lift = [&](VertexSet s) {
          VertexSet out;
          for (int v : s) out.insert(rest.original[v]);
          return out;
        };
        const GenK33Partition q{rest.original[c], lift(p->v2), lift(p->v3), {lift(p->w[0]), lift(p->w[1]), lift(p->w[2])}};
        CHECK_FALSE(lemma25_shortcut(g, a, b, rest.original[c], q));
      }
    }
  }
  CHECK(partitions > 0);
}

TEST_CASE("identification with isolated padding") {
  CHECK(identify(complete(7)) == "K7");
  CHECK(identify(disjoint_union(complete(7), Graph(1))) == "K7+K1");
  CHECK(identify(disjoint_union(complete(7), Graph(2))) == "K7+2K1");
  CHECK(identify(disjoint_union(h8(), Graph(1))) == "H8+K1");
  CHECK(identify(e9()) == "E9");
  CHECK_FALSE(identify(petersen()));
}

TEST_CASE("nine-vertex classification") {
  const ClassificationReport r = classify(9, 21, 3);
  REQUIRE(r.non_apex.size() == 3);
  std::set<std::string> names;
  for (const auto& c : r.non_apex) {
    REQUIRE(c.name);
    names.insert(*c.name);
    CHECK(verify_non_apex_verdict(c.graph, c.verdict));
    CHECK(static_cast<bool>(c.family) == (*c.name != "E9"));
    if (c.family) CHECK(verify_minor_model(c.graph, c.family->model));
  }
  CHECK(names == std::set<std::string>{"E9", "F9", "H9"});
  CHECK(classify(9, 20, 3).non_apex.empty());
}

TEST_CASE("main theorem up to eight vertices") {
  const MainTheoremReport r = verify_main_theorem(8);
  CHECK(r.passed());
  CHECK_FALSE(r.strata.empty());
  CHECK_THROWS_AS(verify_main_theorem(14), DomainError);
}

TEST_CASE("fixture corpus matches the frozen graphs") {
  const std::string dir = APEXIS_FIXTURE_DIR;
  CHECK(from_graph6(read_line(dir + "/e9.g6")) == e9());
  CHECK(from_graph6(read_line(dir + "/h8.g6")) == h8());
  CHECK(from_graph6(read_line(dir + "/f9.g6")) == f9());
  CHECK(from_graph6(read_line(dir + "/h9.g6")) == h9());
  CHECK(canonical_key(from_graph6(read_line(dir + "/f10.g6"))) == canonical_key(f10_candidates().at(0)));
  std::ifstream in(dir + "/manifest.json");
  const auto manifest = nlohmann::json::parse(in);
  for (const auto& entry : manifest.at("graphs")) {
    const Graph g = from_graph6(read_line(dir + "/" + entry.at("file").get<std::string>()));
    CHECK(g.order() == entry.at("order").get<int>());
    CHECK(g.edge_count() == entry.at("edges").get<int>());
    CHECK(g.degree_sequence() == entry.at("degree_sequence").get<std::vector<int>>());
    CHECK(identify(g) == entry.at("name").get<std::string>());
  }
}

TEST_CASE("closure of K5 stays at ten edges") {
  const auto members = delta_y_closure(complete(5));
  CHECK(members.size() > 1);
  for (const auto& m : members) CHECK(m.graph.edge_count() == 10);
}
