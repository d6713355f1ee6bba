#pragma once

// Independent brute-force oracles used to validate the production
// implementations. Everything here favors obviousness over speed and must
// not share algorithmic machinery with the code under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "knotsieve/graph.hpp"

namespace oracles {

using knotsieve::Graph;

// Isomorphism by trying every vertex permutation (degree-pruned).
inline bool perm_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (g.degree(u) != h.degree(perm[u])) ok = false;
      for (int v = u + 1; v < n && ok; ++v) {
        if (g.multiplicity(u, v) != h.multiplicity(perm[u], perm[v])) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Graph random_graph(std::mt19937& rng, int max_vertices,
                          double edge_prob = 0.4, int max_mult = 1) {
  std::uniform_int_distribution<int> nd(0, max_vertices);
  const int n = nd(rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> md(1, max_mult);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < edge_prob) {
        int m = md(rng);
        for (int k = 0; k < m; ++k) edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edge_list()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.vertex_count(), edges);
}

inline Graph random_relabel(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

// Shortest cycle length by BFS from every vertex; nullopt for forests.
// Parallel edges count as 2-cycles.
inline std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.multiplicity(u, v) >= 2) best = std::min(best.value_or(2), 2);
    }
  }
  for (int s = 0; s < g.vertex_count(); ++s) {
    std::vector<int> dist(g.vertex_count(), -1), parent(g.vertex_count(), -1);
    dist[s] = 0;
    std::vector<int> queue{s};
    for (size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      for (int u : g.neighbors(v)) {
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (u != parent[v]) {
          int len = dist[u] + dist[v] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

// All biadjacency matrices with the given row and column sums, deduplicated
// by every row and column permutation (the slow, obviously-correct way).
// Returns representative graphs (rows first, then columns).
inline std::vector<Graph> biadjacency_classes(std::vector<int> rows,
                                              std::vector<int> cols) {
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(cols.size());
  std::vector<uint32_t> row_masks(nr);
  std::vector<std::vector<uint32_t>> found;

  std::vector<int> colsum(nc);
  std::function<void(int)> rec = [&](int r) {
    if (r == nr) {
      for (int j = 0; j < nc; ++j) {
        if (colsum[j] != cols[j]) return;
      }
      found.push_back(row_masks);
      return;
    }
    // every mask with popcount rows[r]
    for (uint32_t m = 0; m < (uint32_t{1} << nc); ++m) {
      if (std::popcount(m) != rows[r]) continue;
      bool ok = true;
      for (int j = 0; j < nc; ++j) {
        if ((m >> j) & 1) {
          if (++colsum[j] > cols[j]) ok = false;
        }
      }
      if (ok) {
        row_masks[r] = m;
        rec(r + 1);
      }
      for (int j = 0; j < nc; ++j) {
        if ((m >> j) & 1) --colsum[j];
      }
    }
  };
  rec(0);

  // Dedup under row and column permutations: canonical representative =
  // lexicographically smallest matrix over all permutations.
  auto canon = [&](const std::vector<uint32_t>& masks) {
    std::vector<int> cperm(nc);
    std::iota(cperm.begin(), cperm.end(), 0);
    std::vector<uint32_t> best;
    do {
      std::vector<uint32_t> permuted(nr);
      for (int r = 0; r < nr; ++r) {
        uint32_t m = 0;
        for (int j = 0; j < nc; ++j) {
          if ((masks[r] >> cperm[j]) & 1) m |= uint32_t{1} << j;
        }
        permuted[r] = m;
      }
      std::sort(permuted.begin(), permuted.end());
      if (best.empty() || permuted < best) best = permuted;
    } while (std::next_permutation(cperm.begin(), cperm.end()));
    return best;
  };

  std::vector<std::vector<uint32_t>> reps;
  std::vector<Graph> out;
  for (const auto& masks : found) {
    auto c = canon(masks);
    if (std::find(reps.begin(), reps.end(), c) == reps.end()) {
      reps.push_back(c);
      std::vector<std::pair<int, int>> edges;
      for (int r = 0; r < nr; ++r) {
        for (int j = 0; j < nc; ++j) {
          if ((c[r] >> j) & 1) edges.emplace_back(r, nr + j);
        }
      }
      out.push_back(Graph(nr + nc, edges));
    }
  }
  return out;
}

}  // namespace oracles
