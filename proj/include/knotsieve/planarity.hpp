#pragma once

#include "knotsieve/graph.hpp"

namespace knotsieve {

// The non-planar graphs that can appear as a reduced graph with at most 10
// edges: K33 (9 edges) and the three 10-edge graphs K5, K33 plus a parallel
// edge on an existing pair (e1), and K33 plus an edge inside one part (e2).
struct NonplanarCatalog {
  static const Graph& k33();
  static const Graph& k5();
  static const Graph& k33_e1();
  static const Graph& k33_e2();
};

// Exact planarity, evaluated on the simple underlying graph (parallel edges
// never change planarity). Face-by-face path addition on each biconnected
// block. The empty graph is planar.
bool is_planar(const Graph& g);

enum class Prop21Verdict {
  kPlanar,
  kK33,
  kK5,
  kK33E1,
  kK33E2,
  kGeneralNonplanar,
};

const char* to_string(Prop21Verdict v);

// Classifies a reduced graph (min degree >= 3 or empty; anything else is a
// precondition error). At most 8 edges is always planar; 9 edges is planar
// unless isomorphic to K33; 10 edges is planar unless isomorphic to one of
// K5, K33+e1, K33+e2; larger graphs fall through to the exact planarity
// test.
Prop21Verdict prop21_classify(const Graph& g);

}  // namespace knotsieve
