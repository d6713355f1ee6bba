#include "knotsieve/planarity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "knotsieve/canonical.hpp"

namespace knotsieve {

namespace {

using Mask = uint32_t;

// Planarity of one biconnected block over localized vertex ids 0..n-1.
// Demoucron-style path addition: keep the face list of a partial embedding,
// repeatedly pick a fragment of the unembedded part and draw one of its
// paths across a face whose boundary contains all of the fragment's
// attachment vertices. A fragment with no admissible face certifies
// non-planarity; fragments with the fewest admissible faces are placed
// first, so forced moves happen before free ones and no backtracking is
// needed.
class BlockPlanarity {
 public:
  BlockPlanarity(int n, std::vector<std::pair<int, int>> edges)
      : n_(n), edges_(std::move(edges)) {
    adj_.assign(n_, 0);
    for (auto [u, v] : edges_) {
      adj_[u] |= Mask{1} << v;
      adj_[v] |= Mask{1} << u;
    }
  }

  bool run() {
    const int m = static_cast<int>(edges_.size());
    if (m <= 8) return true;  // no non-planar graph has fewer than 9 edges
    if (m > 3 * n_ - 6) return false;

    std::vector<int> cycle = find_cycle();
    for (size_t i = 0; i < cycle.size(); ++i) {
      embed_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    faces_.push_back(cycle);
    std::reverse(cycle.begin(), cycle.end());
    faces_.push_back(cycle);

    while (embedded_edges_ < m) {
      if (!embed_one_path()) return false;
    }
    return true;
  }

 private:
  struct Fragment {
    std::vector<int> attachments;  // embedded vertices it touches
    Mask interior = 0;             // unembedded vertices, empty for a chord
    std::vector<size_t> admissible;
  };

  // Any cycle, as a vertex sequence. Recursive DFS: in an undirected graph
  // every non-tree edge closes a cycle with the ancestor path.
  std::vector<int> find_cycle() const {
    std::vector<int> parent(n_, -2), cycle;
    std::function<bool(int)> dfs = [&](int v) -> bool {
      for (int u = 0; u < n_; ++u) {
        if (!((adj_[v] >> u) & 1) || u == parent[v]) continue;
        if (parent[u] == -2) {
          parent[u] = v;
          if (dfs(u)) return true;
        } else {
          for (int w = v; w != u; w = parent[w]) cycle.push_back(w);
          cycle.push_back(u);
          return true;
        }
      }
      return false;
    };
    for (int s = 0; s < n_; ++s) {
      if (parent[s] == -2) {
        parent[s] = -1;
        if (dfs(s)) return cycle;
      }
    }
    throw std::logic_error("biconnected block with 9+ edges has no cycle");
  }

  void embed_edge(int u, int v) {
    embedded_[u] |= Mask{1} << v;
    embedded_[v] |= Mask{1} << u;
    on_h_ |= (Mask{1} << u) | (Mask{1} << v);
    ++embedded_edges_;
  }

  bool embed_one_path() {
    std::vector<Fragment> frags;
    // Chords: unembedded edges with both ends embedded.
    for (auto [u, v] : edges_) {
      if (((embedded_[u] >> v) & 1) == 0 && ((on_h_ >> u) & 1) &&
          ((on_h_ >> v) & 1)) {
        Fragment f;
        f.attachments = {u, v};
        frags.push_back(std::move(f));
      }
    }
    // Components of unembedded vertices, with their attachments.
    Mask todo = 0;
    for (int v = 0; v < n_; ++v) {
      if (!((on_h_ >> v) & 1)) todo |= Mask{1} << v;
    }
    while (todo != 0) {
      int s = std::countr_zero(todo);
      Mask comp = 0, frontier = Mask{1} << s;
      while (frontier != 0) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        comp |= Mask{1} << v;
        frontier |= adj_[v] & todo & ~comp;
      }
      todo &= ~comp;
      Fragment f;
      f.interior = comp;
      Mask att = 0;
      for (int v = 0; v < n_; ++v) {
        if ((comp >> v) & 1) att |= adj_[v] & on_h_;
      }
      for (int v = 0; v < n_; ++v) {
        if ((att >> v) & 1) f.attachments.push_back(v);
      }
      frags.push_back(std::move(f));
    }

    size_t pick = frags.size();
    for (size_t i = 0; i < frags.size(); ++i) {
      Fragment& f = frags[i];
      for (size_t j = 0; j < faces_.size(); ++j) {
        bool ok = true;
        for (int v : f.attachments) {
          if (std::find(faces_[j].begin(), faces_[j].end(), v) ==
              faces_[j].end()) {
            ok = false;
            break;
          }
        }
        if (ok) f.admissible.push_back(j);
      }
      if (f.admissible.empty()) return false;
      if (pick == frags.size() ||
          f.admissible.size() < frags[pick].admissible.size()) {
        pick = i;
      }
    }

    const Fragment& f = frags[pick];
    std::vector<int> path = fragment_path(f);
    split_face(f.admissible.front(), path);
    for (size_t i = 0; i + 1 < path.size(); ++i) embed_edge(path[i], path[i + 1]);
    return true;
  }

  // A path between two distinct attachments whose interior lies in the
  // fragment. Biconnectivity guarantees at least two attachments.
  std::vector<int> fragment_path(const Fragment& f) const {
    if (f.interior == 0) return f.attachments;  // chord
    int start = f.attachments[0];
    std::vector<int> parent(n_, -2), queue;
    for (int v = 0; v < n_; ++v) {
      if (((f.interior >> v) & 1) && ((adj_[start] >> v) & 1)) {
        parent[v] = -1;
        queue.push_back(v);
      }
    }
    for (size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      for (int u = 0; u < n_; ++u) {
        if (!((adj_[v] >> u) & 1)) continue;
        if (((on_h_ >> u) & 1) && u != start) {
          std::vector<int> path{start};
          std::vector<int> tail;
          for (int w = v; w != -1; w = parent[w]) tail.push_back(w);
          std::reverse(tail.begin(), tail.end());
          path.insert(path.end(), tail.begin(), tail.end());
          path.push_back(u);
          return path;
        }
        if (((f.interior >> u) & 1) && parent[u] == -2) {
          parent[u] = v;
          queue.push_back(u);
        }
      }
    }
    throw std::logic_error("fragment has fewer than two attachments");
  }

  // Splits the face boundary cycle at the path's endpoints. Face boundaries
  // in a biconnected partial embedding are simple cycles, so both endpoints
  // occur exactly once.
  void split_face(size_t idx, const std::vector<int>& path) {
    std::vector<int> face = faces_[idx];
    int u = path.front(), v = path.back();
    auto iu = std::find(face.begin(), face.end(), u) - face.begin();
    std::rotate(face.begin(), face.begin() + iu, face.end());
    auto iv = std::find(face.begin(), face.end(), v) - face.begin();

    std::vector<int> f1(face.begin(), face.begin() + iv + 1);  // u .. v
    for (size_t i = path.size() - 1; i >= 2; --i) f1.push_back(path[i - 1]);
    std::vector<int> f2(face.begin() + iv, face.end());        // v .. wrap
    f2.push_back(u);
    for (size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);

    faces_[idx] = std::move(f1);
    faces_.push_back(std::move(f2));
  }

  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Mask> adj_;
  std::array<Mask, kMaxVertices> embedded_{};
  Mask on_h_ = 0;
  int embedded_edges_ = 0;
  std::vector<std::vector<int>> faces_;
};

// Biconnected components of a simple graph, as edge lists.
std::vector<std::vector<std::pair<int, int>>> biconnected_blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<std::pair<int, int>>> blocks;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int u : g.neighbors(v)) {
      if (u == parent) continue;
      if (disc[u] == -1) {
        estack.emplace_back(v, u);
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          std::vector<std::pair<int, int>> block;
          while (true) {
            auto e = estack.back();
            estack.pop_back();
            block.push_back(e);
            if (e == std::make_pair(v, u)) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (disc[u] < disc[v]) {
        estack.emplace_back(v, u);
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] == -1) dfs(s, -1);
  }
  return blocks;
}

const Graph& catalog_graph(int which) {
  static const Graph k33 = Graph::bipartite(
      3, 3, std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {0, 5},
                                             {1, 3}, {1, 4}, {1, 5},
                                             {2, 3}, {2, 4}, {2, 5}});
  static const Graph k5 = [] {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 5; ++u) {
      for (int v = u + 1; v < 5; ++v) e.emplace_back(u, v);
    }
    return Graph(5, e);
  }();
  static const Graph k33e1 = [] {
    auto e = k33.edge_list();
    e.emplace_back(0, 3);  // parallel copy of an existing edge
    return Graph(6, e);
  }();
  static const Graph k33e2 = [] {
    auto e = k33.edge_list();
    e.emplace_back(0, 1);  // edge inside one part
    return Graph(6, e);
  }();
  switch (which) {
    case 0: return k33;
    case 1: return k5;
    case 2: return k33e1;
    default: return k33e2;
  }
}

}  // namespace

const Graph& NonplanarCatalog::k33() { return catalog_graph(0); }
const Graph& NonplanarCatalog::k5() { return catalog_graph(1); }
const Graph& NonplanarCatalog::k33_e1() { return catalog_graph(2); }
const Graph& NonplanarCatalog::k33_e2() { return catalog_graph(3); }

bool is_planar(const Graph& g) {
  Graph s = g.is_simple() ? g : simple_underlying(g);
  if (s.edge_count() <= 8) return true;
  for (auto& block : biconnected_blocks(s)) {
    if (block.size() < 9) continue;  // too small to be non-planar
    // Localize vertex ids.
    std::array<int, kMaxVertices> remap;
    remap.fill(-1);
    int k = 0;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(block.size());
    for (auto [u, v] : block) {
      if (remap[u] == -1) remap[u] = k++;
      if (remap[v] == -1) remap[v] = k++;
      edges.emplace_back(remap[u], remap[v]);
    }
    if (!BlockPlanarity(k, std::move(edges)).run()) return false;
  }
  return true;
}

const char* to_string(Prop21Verdict v) {
  switch (v) {
    case Prop21Verdict::kPlanar: return "PLANAR";
    case Prop21Verdict::kK33: return "K33";
    case Prop21Verdict::kK5: return "K5";
    case Prop21Verdict::kK33E1: return "K33+e1";
    case Prop21Verdict::kK33E2: return "K33+e2";
    case Prop21Verdict::kGeneralNonplanar: return "GENERAL_NONPLANAR";
  }
  return "?";
}

Prop21Verdict prop21_classify(const Graph& g) {
  if (g.vertex_count() > 0 && g.min_degree() < 3) {
    throw std::invalid_argument(
        "prop21_classify expects a reduced graph (min degree >= 3)");
  }
  const int m = g.edge_count();
  if (m <= 8) return Prop21Verdict::kPlanar;
  if (m == 9) {
    return are_isomorphic(g, NonplanarCatalog::k33()) ? Prop21Verdict::kK33
                                                      : Prop21Verdict::kPlanar;
  }
  if (m == 10) {
    if (are_isomorphic(g, NonplanarCatalog::k5())) return Prop21Verdict::kK5;
    if (are_isomorphic(g, NonplanarCatalog::k33_e1())) return Prop21Verdict::kK33E1;
    if (are_isomorphic(g, NonplanarCatalog::k33_e2())) return Prop21Verdict::kK33E2;
    return Prop21Verdict::kPlanar;
  }
  return is_planar(g) ? Prop21Verdict::kPlanar : Prop21Verdict::kGeneralNonplanar;
}

}  // namespace knotsieve
