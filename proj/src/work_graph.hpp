#pragma once

// Internal mutable scratch graph. Vertex ids are stable (no re-densify while
// editing); dead vertices are masked out and dropped when converting back to
// a Graph value. Not part of the public API.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "knotsieve/graph.hpp"

namespace knotsieve {

class WorkGraph {
 public:
  static WorkGraph of(const Graph& g) {
    WorkGraph w;
    w.n_ = g.vertex_count();
    w.alive_count_ = w.n_;
    w.edges_ = g.edge_count();
    for (int v = 0; v < w.n_; ++v) {
      w.alive_[v] = true;
      w.deg_[v] = static_cast<uint16_t>(g.degree(v));
    }
    w.adj_ = g.adj_;
    return w;
  }

  int size() const { return n_; }
  int alive_count() const { return alive_count_; }
  int edge_count() const { return edges_; }
  bool alive(int v) const { return alive_[v]; }
  int degree(int v) const { return deg_[v]; }
  int mult(int u, int v) const { return adj_[u * kMaxVertices + v]; }

  void set_mult(int u, int v, int m) {
    int old = adj_[u * kMaxVertices + v];
    adj_[u * kMaxVertices + v] = static_cast<uint8_t>(m);
    adj_[v * kMaxVertices + u] = static_cast<uint8_t>(m);
    deg_[u] = static_cast<uint16_t>(deg_[u] + m - old);
    deg_[v] = static_cast<uint16_t>(deg_[v] + m - old);
    edges_ += m - old;
  }

  void add_edge(int u, int v, int m = 1) {
    int nm = adj_[u * kMaxVertices + v] + m;
    if (nm > 255) throw std::logic_error("edge multiplicity overflow");
    set_mult(u, v, nm);
  }

  void remove_edge(int u, int v, int m = 1) {
    int nm = adj_[u * kMaxVertices + v] - m;
    if (nm < 0) throw std::logic_error("removing absent edge");
    set_mult(u, v, nm);
  }

  // Removes v and all incident edges.
  void remove_vertex(int v) {
    for (int u = 0; u < n_; ++u) {
      if (adj_[v * kMaxVertices + u] > 0) set_mult(v, u, 0);
    }
    alive_[v] = false;
    --alive_count_;
  }

  // Merges v into u: u picks up v's adjacencies, the merged star is
  // simplified to single edges, loops (u-v multiplicities) are dropped.
  void contract_into(int u, int v) {
    set_mult(u, v, 0);
    for (int w = 0; w < n_; ++w) {
      if (w == u || w == v || !alive_[w]) continue;
      if (adj_[v * kMaxVertices + w] > 0 || adj_[u * kMaxVertices + w] > 0) {
        set_mult(v, w, 0);
        set_mult(u, w, 1);
      }
    }
    alive_[v] = false;
    --alive_count_;
  }

  // Densifies alive vertices (ascending id order). old_ids, when given,
  // receives the original id of each new vertex.
  Graph to_graph(std::vector<int>* old_ids = nullptr) const {
    std::array<int, kMaxVertices> remap{};
    int k = 0;
    if (old_ids) old_ids->clear();
    for (int v = 0; v < n_; ++v) {
      if (alive_[v]) {
        remap[v] = k++;
        if (old_ids) old_ids->push_back(v);
      }
    }
    Graph out;
    out.n_ = static_cast<uint8_t>(k);
    for (int u = 0; u < n_; ++u) {
      if (!alive_[u]) continue;
      for (int v = u + 1; v < n_; ++v) {
        if (!alive_[v]) continue;
        int m = adj_[u * kMaxVertices + v];
        if (m > 0) out.add_edge_internal(remap[u], remap[v], m);
      }
    }
    return out;
  }

 private:
  int n_ = 0;
  int alive_count_ = 0;
  int edges_ = 0;
  std::array<uint8_t, kMaxVertices * kMaxVertices> adj_{};
  std::array<uint16_t, kMaxVertices> deg_{};
  std::array<bool, kMaxVertices> alive_{};
};

}  // namespace knotsieve
