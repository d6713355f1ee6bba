#include "knotsieve/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace knotsieve {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " out of range 0.." +
                                std::to_string(kMaxVertices));
  }
}

}  // namespace

void Graph::add_edge_internal(int u, int v, int mult) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) {
    throw std::invalid_argument("loops are not allowed");
  }
  int m = adj_[u * kMaxVertices + v] + mult;
  if (m > 255) {
    throw std::logic_error("edge multiplicity overflow");
  }
  adj_[u * kMaxVertices + v] = static_cast<uint8_t>(m);
  adj_[v * kMaxVertices + u] = static_cast<uint8_t>(m);
  deg_[u] = static_cast<uint16_t>(deg_[u] + mult);
  deg_[v] = static_cast<uint16_t>(deg_[v] + mult);
  edge_count_ = static_cast<int16_t>(edge_count_ + mult);
}

Graph::Graph(int vertex_count, std::span<const std::pair<int, int>> edges) {
  check_vertex_count(vertex_count);
  n_ = static_cast<uint8_t>(vertex_count);
  for (auto [u, v] : edges) add_edge_internal(u, v, 1);
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges)
    : Graph(vertex_count,
            std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

Graph Graph::bipartite(int na, int nb,
                       std::span<const std::pair<int, int>> edges) {
  check_vertex_count(na + nb);
  if (na < 0 || nb < 0) throw std::invalid_argument("negative part size");
  Graph g;
  g.n_ = static_cast<uint8_t>(na + nb);
  g.has_parts_ = true;
  for (int v = na; v < na + nb; ++v) g.part_[v] = 1;
  for (auto [u, v] : edges) {
    g.add_edge_internal(u, v, 1);
    if (g.part_[u] == g.part_[v]) {
      throw std::invalid_argument("edge inside one part of a bipartite graph");
    }
  }
  return g;
}

int Graph::multiplicity(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw std::out_of_range("vertex id out of range");
  }
  if (u == v) return 0;
  return adj_[u * kMaxVertices + v];
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  return deg_[v];
}

int Graph::simple_degree(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adj_[v * kMaxVertices + u] > 0;
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (adj_[v * kMaxVertices + u] > 0) out.push_back(u);
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      for (int k = 0; k < adj_[u * kMaxVertices + v]; ++k) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_simple() const {
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adj_[u * kMaxVertices + v] > 1) return false;
    }
  }
  return true;
}

int Graph::part_of(int v) const {
  if (!has_parts_) throw std::logic_error("graph carries no part labels");
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  return part_[v];
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || edge_count_ != other.edge_count_) return false;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adj_[u * kMaxVertices + v] != other.adj_[u * kMaxVertices + v]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<int> Graph::degree_multiset() const {
  std::vector<int> d(deg_.begin(), deg_.begin() + n_);
  std::sort(d.rbegin(), d.rend());
  return d;
}

int Graph::min_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = (v == 0) ? deg_[v] : std::min<int>(m, deg_[v]);
  return m;
}

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = std::max<int>(m, deg_[v]);
  return m;
}

bool Graph::is_connected() const {
  return components().size() <= 1;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxVertices> seen{};
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    for (size_t i = 0; i < comp.size(); ++i) {
      int v = comp[i];
      for (int u = 0; u < n_; ++u) {
        if (adj_[v * kMaxVertices + u] > 0 && !seen[u]) {
          seen[u] = true;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph make_graph(int vertex_count, std::span<const std::pair<int, int>> edges) {
  return Graph(vertex_count, edges);
}

Graph make_graph(int vertex_count,
                 std::initializer_list<std::pair<int, int>> edges) {
  return Graph(vertex_count, edges);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(
    const Graph& g) {
  const int n = g.vertex_count();
  std::array<int, kMaxVertices> color{};
  color.fill(-1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    // The smallest vertex of each component goes to side A.
    color[s] = 0;
    std::vector<int> queue{s};
    for (size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      for (int u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (int v = 0; v < n; ++v) {
    (color[v] == 0 ? parts.first : parts.second).push_back(v);
  }
  return parts;
}

Graph simple_underlying(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.vertex_count(), edges);
}

Graph with_parts(const Graph& g, std::span<const uint8_t> parts) {
  if (static_cast<int>(parts.size()) != g.vertex_count()) {
    throw std::invalid_argument("part label count mismatch");
  }
  Graph out = g;
  for (auto [u, v] : g.edge_list()) {
    if (parts[u] == parts[v]) {
      throw std::invalid_argument("edge inside one part");
    }
  }
  out.has_parts_ = true;
  for (int v = 0; v < g.vertex_count(); ++v) out.part_[v] = parts[v] ? 1 : 0;
  return out;
}

}  // namespace knotsieve
