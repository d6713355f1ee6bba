#include <doctest.h>

#include <random>

#include "knotsieve/families.hpp"
#include "knotsieve/graph.hpp"
#include "oracles.hpp"

using namespace knotsieve;

TEST_CASE("make_graph basics") {
  Graph empty = make_graph(0, {});
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.edge_count() == 0);

  Graph k33 = catalog("K33");
  CHECK(k33.edge_count() == 9);
  for (int v = 0; v < 6; ++v) CHECK(k33.degree(v) == 3);

  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(kMaxVertices + 1, {}), std::invalid_argument);
}

TEST_CASE("heawood graph shape") {
  const Graph& h = catalog("HEAWOOD");
  CHECK(h.vertex_count() == 14);
  CHECK(h.edge_count() == 21);
  for (int v = 0; v < 14; ++v) CHECK(h.degree(v) == 3);
  auto parts = bipartition(h);
  REQUIRE(parts.has_value());
  CHECK(parts->first.size() == 7);
  CHECK(parts->second.size() == 7);
  CHECK(oracles::girth(h) == 6);
}

TEST_CASE("multigraph storage") {
  Graph g = make_graph(2, {{0, 1}, {0, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.degree(0) == 2);
  CHECK(g.simple_degree(0) == 1);
  CHECK_FALSE(g.is_simple());

  Graph s = simple_underlying(g);
  CHECK(s.edge_count() == 1);
  CHECK(s == make_graph(2, {{0, 1}}));

  Graph plain = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(simple_underlying(plain) == plain);
}

TEST_CASE("simple_underlying drops one slot of a doubled pair in a reduced value") {
  // Nine edge slots where one pair is doubled: eight distinct adjacencies.
  Graph g = make_graph(6, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4},
                           {4, 5}, {5, 0}, {3, 5}});
  CHECK(g.edge_count() == 9);
  CHECK(simple_underlying(g).edge_count() == 8);
}

TEST_CASE("bipartition") {
  Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto p4 = bipartition(c4);
  REQUIRE(p4.has_value());
  CHECK(p4->first == std::vector<int>{0, 2});
  CHECK(p4->second == std::vector<int>{1, 3});

  Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK_FALSE(bipartition(c5).has_value());

  // Later components anchor their smallest vertex on side A.
  Graph two = make_graph(4, {{0, 1}, {2, 3}});
  auto p2 = bipartition(two);
  REQUIRE(p2.has_value());
  CHECK(p2->first == std::vector<int>{0, 2});

  // No intra-part edge, checked exhaustively over a random corpus.
  std::mt19937 rng(7);
  int checked = 0;
  while (checked < 300) {
    Graph g = oracles::random_graph(rng, 9, 0.25);
    auto parts = bipartition(g);
    if (!parts.has_value()) continue;
    ++checked;
    for (auto side : {parts->first, parts->second}) {
      for (size_t i = 0; i < side.size(); ++i) {
        for (size_t j = i + 1; j < side.size(); ++j) {
          CHECK_FALSE(g.adjacent(side[i], side[j]));
        }
      }
    }
  }
}

TEST_CASE("components and connectivity") {
  Graph g = make_graph(5, {{0, 1}, {3, 4}});
  CHECK_FALSE(g.is_connected());
  auto comps = g.components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2});
  CHECK(comps[2] == std::vector<int>{3, 4});
  CHECK(catalog("K33").is_connected());
}

TEST_CASE("bipartite factory rejects intra-part edges") {
  CHECK_THROWS_AS(Graph::bipartite(2, 2, std::vector<std::pair<int, int>>{{0, 1}}),
                  std::invalid_argument);
  Graph g = Graph::bipartite(2, 2, std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  CHECK(g.has_parts());
  CHECK(g.part_of(0) == 0);
  CHECK(g.part_of(3) == 1);
}
