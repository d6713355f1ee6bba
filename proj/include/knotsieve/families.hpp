#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "knotsieve/canonical.hpp"
#include "knotsieve/graph.hpp"

namespace knotsieve {

// Replaces the triangle on the given vertices by a new degree-3 vertex
// joined to all three. One multiplicity of each triangle edge is consumed;
// vertex count grows by one, edge count is unchanged.
Graph nabla_y(const Graph& g, std::array<int, 3> triangle);

// Reverse move at a degree-3 vertex with three distinct neighbors: the
// vertex goes away and its neighbors are joined pairwise. A pair that is
// already adjacent stays a single edge, so the edge count can drop.
Graph y_nabla(const Graph& g, int v);

// Closure of a seed under both moves, up to isomorphism.
struct Family {
  std::string seed_name;
  std::map<CanonicalCode, Graph> members;

  size_t size() const { return members.size(); }
  bool contains(const CanonicalCode& c) const { return members.count(c) > 0; }
};

// Breadth-first closure over every applicable move site, deduplicated by
// canonical code. Throws std::runtime_error if the closure exceeds
// safety_cap members.
Family cousins(const Graph& seed, std::string seed_name = "",
               size_t safety_cap = 10000);

// Named graphs: K7, K5, K33, K55, K3311 (complete 4-partite on parts
// 3,3,1,1), HEAWOOD (point-line incidence graph of the Fano plane) and
// COUSIN110 (K55 minus the three edges of a 3-edge path). Unknown names
// throw std::invalid_argument.
const Graph& catalog(std::string_view name);

}  // namespace knotsieve
