#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace knotsieve {

// Hard cap on vertex count. Everything in this project lives on very small
// graphs (23-edge bipartite graphs have at most 14 vertices), so fixed-size
// storage keeps graph values cheap to copy and trivially shareable between
// threads.
inline constexpr int kMaxVertices = 20;

// Undirected multigraph on at most kMaxVertices vertices, vertex ids 0..n-1.
// Loops are rejected at construction; parallel edges are stored as per-pair
// multiplicities. Values are immutable after construction: every operation
// that "modifies" a graph returns a new value.
//
// An optional bipartition label per vertex (0 = side A, 1 = side B) can be
// attached. Labels are metadata for bookkeeping and never participate in
// equality or canonical codes.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::span<const std::pair<int, int>> edges);
  Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges);

  // Bipartite constructor: vertices 0..na-1 form side A, na..na+nb-1 side B.
  // Every edge must join the two sides.
  static Graph bipartite(int na, int nb,
                         std::span<const std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  // Number of edges counted with multiplicity.
  int edge_count() const { return edge_count_; }
  int multiplicity(int u, int v) const;
  bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }
  // Degree counted with multiplicity.
  int degree(int v) const;
  // Number of distinct neighbors.
  int simple_degree(int v) const;
  std::vector<int> neighbors(int v) const;

  // Every edge once per multiplicity, as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edge_list() const;
  bool is_simple() const;

  bool has_parts() const { return has_parts_; }
  // 0 for side A, 1 for side B. Only meaningful when has_parts().
  int part_of(int v) const;

  // Label-sensitive equality (same vertex ids, same multiplicities).
  // Part labels are ignored. Use are_isomorphic() for unlabeled equality.
  bool operator==(const Graph& other) const;

  // Degrees sorted descending; a cheap isomorphism invariant.
  std::vector<int> degree_multiset() const;
  int min_degree() const;  // 0 for the empty graph
  int max_degree() const;

  bool is_connected() const;
  // Vertex sets of connected components, each sorted, ordered by smallest id.
  std::vector<std::vector<int>> components() const;

 private:
  friend class WorkGraph;

  uint8_t n_ = 0;
  int16_t edge_count_ = 0;
  bool has_parts_ = false;
  std::array<uint8_t, kMaxVertices * kMaxVertices> adj_{};
  std::array<uint16_t, kMaxVertices> deg_{};
  std::array<uint8_t, kMaxVertices> part_{};

  void add_edge_internal(int u, int v, int mult);
};

Graph make_graph(int vertex_count, std::span<const std::pair<int, int>> edges);
Graph make_graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges);

// Two-coloring of a graph, when one exists. Side A contains vertex 0; in
// every later connected component, the component's smallest vertex goes to
// the side of A. Returns nullopt exactly when some component has an odd
// cycle. Sets are sorted.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(
    const Graph& g);

// Collapses parallel edge classes to single edges.
Graph simple_underlying(const Graph& g);

// Attaches part labels to a copy of g (parts[v] in {0,1}; every edge must be
// bichromatic).
Graph with_parts(const Graph& g, std::span<const uint8_t> parts);

}  // namespace knotsieve
