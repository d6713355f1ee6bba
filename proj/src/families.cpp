#include "knotsieve/families.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <vector>

#include "check.hpp"
#include "work_graph.hpp"

namespace knotsieve {

Graph nabla_y(const Graph& g, std::array<int, 3> triangle) {
  auto [x, y, z] = triangle;
  const int n = g.vertex_count();
  if (x < 0 || x >= n || y < 0 || y >= n || z < 0 || z >= n || x == y ||
      y == z || x == z) {
    throw std::invalid_argument("nabla_y: need three distinct vertices");
  }
  if (!g.adjacent(x, y) || !g.adjacent(y, z) || !g.adjacent(x, z)) {
    throw std::invalid_argument("nabla_y: vertices do not form a triangle");
  }
  if (n + 1 > kMaxVertices) throw std::invalid_argument("nabla_y: vertex cap");
  std::vector<std::pair<int, int>> edges = g.edge_list();
  for (auto pair : {std::pair{x, y}, std::pair{y, z}, std::pair{x, z}}) {
    auto [a, b] = std::minmax(pair.first, pair.second);
    edges.erase(std::find(edges.begin(), edges.end(), std::pair{a, b}));
  }
  edges.emplace_back(x, n);
  edges.emplace_back(y, n);
  edges.emplace_back(z, n);
  return Graph(n + 1, edges);
}

Graph y_nabla(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw std::invalid_argument("y_nabla: vertex out of range");
  }
  if (g.degree(v) != 3 || g.simple_degree(v) != 3) {
    throw std::invalid_argument(
        "y_nabla: vertex must have degree 3 with three distinct neighbors");
  }
  std::vector<int> nb = g.neighbors(v);
  WorkGraph w = WorkGraph::of(g);
  w.remove_vertex(v);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      // Doubled edges are merged back to single edges.
      if (w.mult(nb[i], nb[j]) == 0) w.add_edge(nb[i], nb[j]);
    }
  }
  return w.to_graph();
}

Family cousins(const Graph& seed, std::string seed_name, size_t safety_cap) {
  Family fam;
  fam.seed_name = std::move(seed_name);
  std::deque<Graph> frontier;
  fam.members.emplace(canonical_code(seed), seed);
  frontier.push_back(seed);

  auto visit = [&](Graph&& g) {
    CanonicalCode code = canonical_code(g);
    if (fam.members.count(code)) return;
    if (fam.members.size() >= safety_cap) {
      throw std::runtime_error(
          "cousins: closure exceeded safety cap of " +
          std::to_string(safety_cap) + " members (seed " + fam.seed_name + ")");
    }
    fam.members.emplace(std::move(code), g);
    frontier.push_back(std::move(g));
  };

  while (!frontier.empty()) {
    Graph g = std::move(frontier.front());
    frontier.pop_front();
    const int n = g.vertex_count();
    // Triangle sites. A family needing more than kMaxVertices vertices makes
    // nabla_y throw, which is the right outcome: silent truncation would
    // falsify the closure.
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (!g.adjacent(x, y)) continue;
        for (int z = y + 1; z < n; ++z) {
          if (g.adjacent(x, z) && g.adjacent(y, z)) {
            visit(nabla_y(g, {x, y, z}));
          }
        }
      }
    }
    // Degree-3 sites.
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 3 && g.simple_degree(v) == 3) {
        visit(y_nabla(g, v));
      }
    }
  }
  return fam;
}

namespace {

Graph build_complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

Graph build_complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  }
  return Graph::bipartite(a, b, e);
}

// Complete 4-partite graph on parts of sizes 3, 3, 1, 1.
Graph build_k3311() {
  std::vector<int> part_of{0, 0, 0, 1, 1, 1, 2, 3};
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 8; ++u) {
    for (int v = u + 1; v < 8; ++v) {
      if (part_of[u] != part_of[v]) e.emplace_back(u, v);
    }
  }
  return Graph(8, e);
}

// Point-line incidence graph of the Fano plane: vertices 0..6 are points,
// 7..13 are lines.
Graph build_heawood() {
  static const int lines[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                  {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  std::vector<std::pair<int, int>> e;
  for (int l = 0; l < 7; ++l) {
    for (int p : lines[l]) e.emplace_back(p, 7 + l);
  }
  return Graph::bipartite(7, 7, e);
}

// K55 minus the three edges of the path b1-a1-b2-a2 (vertices 0..4 on side
// A, 5..9 on side B; a1=0, a2=1, b1=5, b2=6).
Graph build_cousin110() {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 5; ++u) {
    for (int v = 5; v < 10; ++v) {
      bool dropped = (u == 0 && v == 5) || (u == 0 && v == 6) || (u == 1 && v == 6);
      if (!dropped) e.emplace_back(u, v);
    }
  }
  return Graph::bipartite(5, 5, e);
}

}  // namespace

const Graph& catalog(std::string_view name) {
  static const Graph k7 = build_complete(7);
  static const Graph k5 = build_complete(5);
  static const Graph k33 = build_complete_bipartite(3, 3);
  static const Graph k55 = build_complete_bipartite(5, 5);
  static const Graph k3311 = build_k3311();
  static const Graph heawood = build_heawood();
  static const Graph cousin110 = build_cousin110();
  if (name == "K7") return k7;
  if (name == "K5") return k5;
  if (name == "K33") return k33;
  if (name == "K55") return k55;
  if (name == "K3311") return k3311;
  if (name == "HEAWOOD") return heawood;
  if (name == "COUSIN110") return cousin110;
  throw std::invalid_argument("catalog: unknown graph name '" +
                              std::string(name) + "'");
}

}  // namespace knotsieve
