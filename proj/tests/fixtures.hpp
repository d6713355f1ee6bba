#pragma once

// Hand-built 23-edge bipartite graphs realizing specific degree
// combinations; side A occupies the low vertex ids.

#include "knotsieve/graph.hpp"

namespace fixtures {

using knotsieve::Graph;

// A = (6,4,4,3,3,3), B = (4,4,4,4,4,3). Vertex 0 sees all of B, vertices 1
// and 2 share the unique degree-3 vertex of B (11), and 6,7,8 are common
// degree-4 neighbors of 0 and 1.
inline Graph deg6_example() {
  return Graph::bipartite(
      6, 6,
      std::vector<std::pair<int, int>>{
          {0, 6}, {0, 7}, {0, 8}, {0, 9}, {0, 10}, {0, 11},
          {1, 6}, {1, 7}, {1, 8}, {1, 11},
          {2, 6}, {2, 7}, {2, 8}, {2, 11},
          {3, 6}, {3, 9}, {3, 10},
          {4, 7}, {4, 9}, {4, 10},
          {5, 8}, {5, 9}, {5, 10}});
}

// [A] = [2,1,3] and [B] = [1,3,2] with the two degree-5 vertices on opposite
// sides not adjacent (0 on side A, 6 on side B).
inline Graph nonadjacent_fives_example() {
  return Graph::bipartite(
      6, 6,
      std::vector<std::pair<int, int>>{
          {0, 7}, {0, 8}, {0, 9}, {0, 10}, {0, 11},
          {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6},
          {1, 7}, {1, 8}, {1, 9}, {1, 10},
          {2, 7}, {2, 8}, {2, 11},
          {3, 9}, {3, 11},
          {4, 7}, {4, 8},
          {5, 9}, {5, 10}});
}

// [A] = [0,5,1] on both sides: vertices 0..4 and 6..10 have degree 4, vertex
// 5 and 11 degree 3. All pair reductions stay non-planar, yet the graph has
// a knotless embedding, so the sieve must report it UNDETERMINED.
inline Graph undetermined_example() {
  return Graph::bipartite(
      6, 6,
      std::vector<std::pair<int, int>>{
          {0, 6}, {0, 7}, {0, 8}, {0, 9},
          {1, 6}, {1, 7}, {1, 8}, {1, 10},
          {2, 6}, {2, 7}, {2, 9}, {2, 10},
          {3, 8}, {3, 9}, {3, 10}, {3, 11},
          {4, 8}, {4, 9}, {4, 10}, {4, 11},
          {5, 6}, {5, 7}, {5, 11}});
}

}  // namespace fixtures
