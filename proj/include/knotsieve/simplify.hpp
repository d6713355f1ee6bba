#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "knotsieve/graph.hpp"

namespace knotsieve {

enum class RemovalReason : uint8_t {
  kDeletedWithPair,
  kDegree1Prune,
  kDegree2Suppress,
  kIsolated,
};

const char* to_string(RemovalReason r);

// Bookkeeping for one reduction G -> G-hat_{a,b}. The edge accounting is
//   predicted = |E| - ne - nv3 - nv4 - nvy
// where ne counts edges incident to the pair, nv3/nv4 count the forced low
// degree neighbors, and nvy counts removed vertices adjacent to neither a
// nor b. actual_edges is what the reduction really produced; the two are
// compared by audit_count_equation and the sieve, never assumed equal.
struct ReductionTrace {
  std::pair<int, int> removed_pair{-1, -1};
  int ne = 0;
  int nv3 = 0;
  int nv4 = 0;
  int nvy = 0;
  int predicted_edges = 0;
  int actual_edges = 0;
  // Original vertex ids of g, in removal order (the pair first).
  std::vector<std::pair<int, RemovalReason>> removed_vertices;
};

// Neighbors of v whose degree is exactly n.
std::vector<int> neighbors_of_degree(const Graph& g, int v, int n);

struct DeleteResult {
  Graph graph;
  std::vector<int> kept_old_ids;         // new id -> old id
  std::vector<int> dropped_isolated;     // old ids isolated by the deletion
};

// Induced subgraph on the complement of `victims`; vertices isolated by the
// deletion are dropped as well. Ids are re-densified in ascending order.
DeleteResult delete_vertices(const Graph& g, std::span<const int> victims);

struct ReduceResult {
  Graph graph;
  std::vector<int> kept_old_ids;  // new id -> id in reduce() input
  std::vector<std::pair<int, RemovalReason>> removals;  // input ids, in order
};

// Cascades away low-degree vertices until min degree >= 3 or nothing is
// left: degree-0 and degree-1 vertices are deleted; a degree-2 vertex is
// suppressed by replacing its two edges with one edge joining its neighbors,
// or deleted outright together with both edges when they go to the same
// neighbor (no loop is ever kept). The smallest qualifying id is always
// processed first, so runs are reproducible.
ReduceResult reduce(const Graph& g);

// G-hat_{a,b} = reduce(delete_vertices(g, {a, b})) plus the filled-in trace.
std::pair<Graph, ReductionTrace> hat(const Graph& g, int a, int b);

struct CountAuditRow {
  std::pair<int, int> pair;
  int predicted = 0;
  int actual = 0;
};

// One row per unordered vertex pair; callers flag rows with
// predicted != actual.
std::vector<CountAuditRow> audit_count_equation(const Graph& g);

namespace detail {
// Same cascade with a seeded random choice among qualifying vertices; used
// to exercise reduction confluence.
ReduceResult reduce_shuffled(const Graph& g, uint32_t seed);
}  // namespace detail

}  // namespace knotsieve
