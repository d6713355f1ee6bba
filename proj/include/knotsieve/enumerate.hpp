#pragma once

#include <functional>
#include <string>
#include <vector>

#include "knotsieve/canonical.hpp"
#include "knotsieve/graph.hpp"

namespace knotsieve {

// Unordered pair of per-part degree multisets summing to the edge budget.
// Both sides are stored descending, with deg_a >= deg_b lexicographically.
struct DegreeCombination {
  std::vector<int> deg_a;
  std::vector<int> deg_b;

  static DegreeCombination normalized(std::vector<int> a, std::vector<int> b);
  int edge_budget() const;
  // "A5.5.5.4.3_B5.5.5.4.4": degrees joined by dots, parts by an underscore.
  std::string label() const;
  std::string cache_file_name() const { return label() + ".g6"; }

  auto operator<=>(const DegreeCombination&) const = default;
};

// Exhaustive, duplicate-free list of valid combinations: every degree at
// least min_degree, each part's maximum degree capped by the other part's
// size. Sorted.
std::vector<DegreeCombination> degree_combinations(int edge_budget,
                                                   int min_degree);

struct EnumeratedClass {
  Graph graph;  // vertices 0..|A|-1 form side A; part labels attached
  CanonicalCode code;
};

// Every simple bipartite graph realizing the combination, exactly once up to
// isomorphism, sorted by canonical code: row-by-row biadjacency backtracking
// in descending degree order with column-symmetry pruning, then canonical
// dedup. Infeasible combinations yield an empty list.
std::vector<EnumeratedClass> enumerate_bipartite(const DegreeCombination& dc);

// Whether dc is the canonical home of g. Connected bipartite graphs realize
// a single degree-multiset split and are always owned; a disconnected graph
// realizes one split per orientation of its components and belongs to the
// lexicographically greatest, so it is emitted exactly once across the whole
// domain.
bool combination_owns(const DegreeCombination& dc, const Graph& g);

// The full search space for a budget, streamed per combination in sorted
// order. Disconnected graphs are skipped unless requested: every component
// of a bipartite graph within these budgets has fewer than 21 edges, below
// the minimum size of an intrinsically knotted graph.
void enumerate_domain(
    int edge_budget, int min_degree, bool connected_only,
    const std::function<void(const DegreeCombination&, const EnumeratedClass&)>&
        sink);

}  // namespace knotsieve
