#include <doctest.h>

#include <random>

#include "knotsieve/canonical.hpp"
#include "knotsieve/families.hpp"
#include "knotsieve/minors.hpp"
#include "knotsieve/planarity.hpp"
#include "knotsieve/simplify.hpp"
#include "oracles.hpp"

using namespace knotsieve;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

}  // namespace

TEST_CASE("basic minors") {
  auto w = has_minor(cycle(5), complete(3));
  REQUIRE(w.has_value());
  // Replay is validated inside has_minor; double-check the shape here.
  CHECK(are_isomorphic(apply_minor_ops(cycle(5), w->script), complete(3)));

  Graph tree = make_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  CHECK_FALSE(has_minor(tree, complete(3)).has_value());

  CHECK(has_minor(catalog("K33"), complete(4)).has_value());
  CHECK(has_minor(catalog("K5"), complete(5)).has_value());
  CHECK_FALSE(has_minor(complete(4), catalog("K33")).has_value());
}

TEST_CASE("empty target is a minor of anything") {
  auto w = has_minor(complete(3), make_graph(0, {}));
  REQUIRE(w.has_value());
  CHECK(apply_minor_ops(complete(3), w->script).vertex_count() == 0);
}

TEST_CASE("minor relation is transitive on random triples") {
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 60) {
    Graph g = oracles::random_graph(rng, 7, 0.5);
    Graph h = oracles::random_graph(rng, 5, 0.5);
    Graph k = oracles::random_graph(rng, 4, 0.5);
    if (has_minor(g, h).has_value() && has_minor(h, k).has_value()) {
      ++checked;
      CHECK(has_minor(g, k).has_value());
    }
  }
}

TEST_CASE("topological minors") {
  CHECK(has_topological_minor(catalog("HEAWOOD"), catalog("K33")));
  CHECK_FALSE(has_topological_minor(complete(4), catalog("K33")));
  // Subdividing K33 keeps the subdivision relation visible.
  auto edges = catalog("K33").edge_list();
  edges.erase(std::find(edges.begin(), edges.end(), std::pair{0, 3}));
  edges.emplace_back(0, 6);
  edges.emplace_back(6, 3);
  CHECK(has_topological_minor(make_graph(7, edges), catalog("K33")));
}

TEST_CASE("cubic targets: topological equals minor containment") {
  std::mt19937 rng(29);
  const Graph& k4 = complete(4);
  const Graph& k33 = catalog("K33");
  for (int i = 0; i < 120; ++i) {
    Graph g = oracles::random_graph(rng, 8, 0.45);
    CHECK(has_topological_minor(g, k4) == has_minor(g, k4).has_value());
    CHECK(has_topological_minor(g, k33) == has_minor(g, k33).has_value());
  }
}

TEST_CASE("planar hosts never contain kuratowski minors") {
  std::mt19937 rng(31);
  int planar_seen = 0;
  while (planar_seen < 150) {
    Graph g = oracles::random_graph(rng, 8, 0.4);
    if (!is_planar(g)) continue;
    ++planar_seen;
    CHECK_FALSE(has_minor(g, catalog("K5")).has_value());
    CHECK_FALSE(has_minor(g, catalog("K33")).has_value());
  }
}

TEST_CASE("catalog certification") {
  // The Heawood graph certifies itself with an empty script.
  auto self = ik_by_catalog(catalog("HEAWOOD"));
  REQUIRE(self.has_value());
  CHECK(self->first == "HEAWOOD");
  CHECK(self->second.script.empty());

  // Cousin 110 plus one edge: certified through Cousin 110 with one deletion.
  auto edges = catalog("COUSIN110").edge_list();
  edges.emplace_back(0, 5);
  auto cert = ik_by_catalog(make_graph(10, edges));
  REQUIRE(cert.has_value());
  CHECK(cert->first == "COUSIN110");
  CHECK(cert->second.script.size() == 1);
  CHECK(cert->second.script[0].kind == MinorOpKind::kDeleteEdge);

  // A planar host cannot carry either witness: both catalog graphs are
  // non-planar and planarity is minor-closed.
  Graph cube = make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                              {4, 5}, {5, 6}, {6, 7}, {7, 4},
                              {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  REQUIRE(is_planar(cube));
  CHECK_FALSE(ik_by_catalog(cube).has_value());
}

TEST_CASE("specialized deletion route agrees with the general search") {
  // Hosts two edges above the Heawood graph: add cross edges and compare the
  // general minor search against deleting edge pairs and comparing codes.
  std::mt19937 rng(53);
  const Graph& hw = catalog("HEAWOOD");
  CanonicalCode hw_code = canonical_code(hw);
  for (int trial = 0; trial < 10; ++trial) {
    auto edges = hw.edge_list();
    int added = 0;
    while (added < 2) {
      int u = static_cast<int>(rng() % 7);
      int v = 7 + static_cast<int>(rng() % 7);
      if (std::find(edges.begin(), edges.end(), std::pair{u, v}) == edges.end()) {
        edges.emplace_back(u, v);
        ++added;
      }
    }
    Graph host = make_graph(14, edges);
    bool direct = false;
    auto all = host.edge_list();
    for (size_t i = 0; i < all.size() && !direct; ++i) {
      for (size_t j = i + 1; j < all.size() && !direct; ++j) {
        std::vector<MinorOp> script{
            {MinorOpKind::kDeleteEdge, all[i].first, all[i].second},
            {MinorOpKind::kDeleteEdge, all[j].first, all[j].second}};
        Graph cut = apply_minor_ops(host, script);
        Graph red = reduce(cut).graph;
        direct = red.vertex_count() == 14 && canonical_code(red) == hw_code;
      }
    }
    CHECK(direct == has_minor(host, hw).has_value());
  }
}
