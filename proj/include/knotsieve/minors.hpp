#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "knotsieve/graph.hpp"

namespace knotsieve {

enum class MinorOpKind : uint8_t { kDeleteEdge, kDeleteVertex, kContractEdge };

struct MinorOp {
  MinorOpKind kind;
  int u = -1;
  int v = -1;  // unused for kDeleteVertex

  bool operator==(const MinorOp&) const = default;
};

// A replayable certificate that the target is a minor of some host: applying
// the script to the host yields a graph isomorphic to the target. Vertex ids
// refer to the host's original labeling throughout (contracting (u, v)
// merges v into u; ids are never re-densified mid-script).
struct MinorWitness {
  std::string target_name;
  std::vector<MinorOp> script;
};

// Replays a witness script. Contraction merges the contracted vertex's star
// to single edges and drops loops. The result is re-densified at the end.
Graph apply_minor_ops(const Graph& host, std::span<const MinorOp> script);

// Exhaustive delete/contract search, pruned by vertex count, edge count and
// (once no contraction can help) degree-multiset dominance, with failed
// hosts memoized by canonical code. Every returned witness has been replayed
// and validated.
std::optional<MinorWitness> has_minor(const Graph& g, const Graph& h);

// Does g contain a subdivision of h? Branches over images of h's vertices,
// then realizes h's edges as internally disjoint paths.
bool has_topological_minor(const Graph& g, const Graph& h);

// Catalog certification: a Heawood or Cousin 110 minor proves the host
// intrinsically knotted. Checks HEAWOOD first, then COUSIN110. For cubic
// targets with at most two surplus edges this takes the specialized
// delete-reduce-compare route.
std::optional<std::pair<std::string, MinorWitness>> ik_by_catalog(const Graph& g);

}  // namespace knotsieve
