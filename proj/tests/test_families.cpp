#include <doctest.h>

#include "knotsieve/canonical.hpp"
#include "knotsieve/families.hpp"
#include "oracles.hpp"

using namespace knotsieve;

namespace {

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

}  // namespace

TEST_CASE("nabla_y") {
  // K4 with a triangle starred becomes K23.
  Graph k4 = complete(4);
  Graph moved = nabla_y(k4, {0, 1, 2});
  CHECK(moved.vertex_count() == 5);
  CHECK(moved.edge_count() == 6);
  CHECK(are_isomorphic(moved, Graph::bipartite(2, 3, std::vector<std::pair<int, int>>{
                                   {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})));

  Graph k7 = complete(7);
  Graph h8 = nabla_y(k7, {0, 1, 2});
  CHECK(h8.vertex_count() == 8);
  CHECK(h8.edge_count() == 21);
  int deg3 = 0;
  for (int v = 0; v < 8; ++v) deg3 += h8.degree(v) == 3;
  CHECK(deg3 == 1);

  CHECK_THROWS_AS(nabla_y(cycle(4), {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("y_nabla") {
  // Inverse pair at a fresh star vertex.
  Graph k4 = complete(4);
  Graph there = nabla_y(k4, {0, 1, 2});
  Graph back = y_nabla(there, 4);
  CHECK(are_isomorphic(back, k4));

  // K33 at any vertex gives K5 minus an edge.
  Graph moved = y_nabla(catalog("K33"), 0);
  CHECK(moved.vertex_count() == 5);
  CHECK(moved.edge_count() == 9);
  CHECK(moved.degree_multiset() == std::vector<int>{4, 4, 4, 3, 3});

  // A degree-3 vertex whose neighbors already form a triangle: the triangle
  // stays single and three edges vanish.
  Graph k4_again = complete(4);
  Graph dropped = y_nabla(k4_again, 3);
  CHECK(are_isomorphic(dropped, complete(3)));
  CHECK(dropped.edge_count() == k4_again.edge_count() - 3);

  CHECK_THROWS_AS(y_nabla(complete(5), 0), std::invalid_argument);
}

TEST_CASE("cousins of c4 is just c4") {
  Family fam = cousins(cycle(4), "C4");
  CHECK(fam.size() == 1);
}

TEST_CASE("k7 family") {
  Family fam = cousins(catalog("K7"), "K7");
  CHECK(fam.size() == 14);

  // Exactly one member is bipartite, and it is the Heawood graph.
  int bipartite_members = 0;
  bool heawood_found = false;
  CanonicalCode hw = canonical_code(catalog("HEAWOOD"));
  for (const auto& [code, g] : fam.members) {
    if (bipartition(g).has_value()) {
      ++bipartite_members;
      heawood_found = heawood_found || code == hw;
    }
    CHECK(g.edge_count() == 21);
  }
  CHECK(bipartite_members == 1);
  CHECK(heawood_found);
}

TEST_CASE("family closure is seed independent") {
  Family fam = cousins(catalog("K7"), "K7");
  std::vector<CanonicalCode> codes;
  for (const auto& [code, g] : fam.members) codes.push_back(code);
  for (const auto& [code, member] : fam.members) {
    Family again = cousins(member);
    std::vector<CanonicalCode> again_codes;
    for (const auto& [c, g] : again.members) again_codes.push_back(c);
    CHECK(again_codes == codes);
  }
}

TEST_CASE("cousin 110 family") {
  const Graph& c110 = catalog("COUSIN110");
  CHECK(c110.edge_count() == 22);
  CHECK(bipartition(c110).has_value());
  std::vector<int> degs = c110.degree_multiset();
  CHECK(degs == std::vector<int>{5, 5, 5, 5, 5, 5, 4, 4, 3, 3});
  Family fam = cousins(c110, "COUSIN110");
  CHECK(fam.size() == 33);
  CHECK(fam.contains(canonical_code(c110)));
}

TEST_CASE("k3311 family") {
  const Graph& seed = catalog("K3311");
  CHECK(seed.vertex_count() == 8);
  CHECK(seed.edge_count() == 22);
  Family fam = cousins(seed, "K3311");
  CHECK(fam.size() == 58);
}

TEST_CASE("closure cap aborts loudly") {
  CHECK_THROWS_AS(cousins(catalog("K7"), "K7", 5), std::runtime_error);
}

TEST_CASE("catalog") {
  CHECK(catalog("K7").edge_count() == 21);
  CHECK(catalog("K55").edge_count() == 25);
  CHECK(oracles::girth(catalog("HEAWOOD")) == 6);
  CHECK_THROWS_AS(catalog("K99"), std::invalid_argument);
}
