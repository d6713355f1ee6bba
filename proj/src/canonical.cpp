#include "knotsieve/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>
#include <vector>

namespace knotsieve {

namespace {

constexpr int kCodeCap = 1 + kMaxVertices * (kMaxVertices - 1) / 2;

// Iterative partition refinement. Starts from a single class and splits by
// the multiset of (neighbor color, multiplicity) signatures until stable.
// Class numbering is determined by signature order only, so it is invariant
// under relabeling of the input.
int refine_colors(const uint8_t adj[kMaxVertices][kMaxVertices], int n,
                  std::array<int, kMaxVertices>& color) {
  color.fill(0);
  if (n == 0) return 0;
  int classes = 1;
  std::vector<std::vector<int>> sig(n);
  std::array<int, kMaxVertices> order{};
  while (true) {
    for (int v = 0; v < n; ++v) {
      sig[v].clear();
      sig[v].push_back(color[v]);
      for (int u = 0; u < n; ++u) {
        if (adj[v][u] > 0) sig[v].push_back((color[u] << 9) | adj[v][u]);
      }
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::iota(order.begin(), order.begin() + n, 0);
    std::sort(order.begin(), order.begin() + n,
              [&](int a, int b) { return sig[a] < sig[b]; });
    int count = 0;
    std::array<int, kMaxVertices> next{};
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++count;
      next[order[i]] = count;
    }
    ++count;
    if (count == classes) break;  // no class split: partition is stable
    classes = count;
    color = next;
  }
  return classes;
}

struct CanonSearch {
  int n = 0;
  uint8_t adj[kMaxVertices][kMaxVertices] = {};
  std::array<int, kMaxVertices> color{};
  std::array<int, kMaxVertices> target{};   // color required at each position
  std::array<int, kMaxVertices> assigned{};
  std::array<bool, kMaxVertices> used{};
  std::array<int, kMaxVertices + 1> offset{};
  uint8_t cur[kCodeCap] = {};
  uint8_t best[kCodeCap] = {};
  bool have_best = false;

  enum State { kEq, kLt };

  // Explores all color-respecting labelings, pruning any branch whose code
  // prefix exceeds the best code found so far. Returns true when best was
  // replaced inside the subtree; the caller then knows its own prefix equals
  // the prefix of the new best and resets its state to kEq.
  bool dfs(int k, State state) {
    if (k == n) {
      if (!have_best || state == kLt) {
        std::memcpy(best, cur, static_cast<size_t>(offset[n]));
        have_best = true;
        return true;
      }
      return false;
    }
    bool replaced = false;
    const int off = offset[k];
    for (int v = 0; v < n; ++v) {
      if (used[v] || color[v] != target[k]) continue;
      State st = state;
      bool pruned = false;
      for (int i = 0; i < k; ++i) {
        uint8_t b = adj[v][assigned[i]];
        cur[off + i] = b;
        if (st == kEq && have_best) {
          if (b > best[off + i]) {
            pruned = true;
            break;
          }
          if (b < best[off + i]) st = kLt;
        }
      }
      if (pruned) continue;
      used[v] = true;
      assigned[k] = v;
      if (dfs(k + 1, st)) {
        replaced = true;
        state = kEq;
      }
      used[v] = false;
    }
    return replaced;
  }
};

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
  CanonSearch s;
  s.n = g.vertex_count();
  for (int u = 0; u < s.n; ++u) {
    for (int v = 0; v < s.n; ++v) {
      s.adj[u][v] = u == v ? 0 : static_cast<uint8_t>(g.multiplicity(u, v));
    }
  }
  refine_colors(s.adj, s.n, s.color);

  // Positions take color classes in ascending class order.
  std::array<int, kMaxVertices> sorted_colors{};
  for (int v = 0; v < s.n; ++v) sorted_colors[v] = s.color[v];
  std::sort(sorted_colors.begin(), sorted_colors.begin() + s.n);
  s.target = sorted_colors;

  for (int k = 0; k <= s.n; ++k) s.offset[k] = 1 + k * (k - 1) / 2;
  s.cur[0] = static_cast<uint8_t>(s.n);
  s.dfs(0, CanonSearch::kEq);

  CanonicalCode code;
  if (s.n == 0) {
    code.bytes.assign(1, '\0');
  } else {
    code.bytes.assign(reinterpret_cast<const char*>(s.best),
                      static_cast<size_t>(s.offset[s.n]));
  }
  return code;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
    return false;
  }
  if (g.degree_multiset() != h.degree_multiset()) return false;
  return canonical_code(g) == canonical_code(h);
}

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

}  // namespace knotsieve
