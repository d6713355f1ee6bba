#include "knotsieve/simplify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "work_graph.hpp"

namespace knotsieve {

const char* to_string(RemovalReason r) {
  switch (r) {
    case RemovalReason::kDeletedWithPair: return "deleted-with-pair";
    case RemovalReason::kDegree1Prune: return "degree1-prune";
    case RemovalReason::kDegree2Suppress: return "degree2-suppress";
    case RemovalReason::kIsolated: return "isolated";
  }
  return "?";
}

std::vector<int> neighbors_of_degree(const Graph& g, int v, int n) {
  std::vector<int> out;
  for (int u : g.neighbors(v)) {
    if (g.degree(u) == n) out.push_back(u);
  }
  return out;
}

DeleteResult delete_vertices(const Graph& g, std::span<const int> victims) {
  WorkGraph w = WorkGraph::of(g);
  for (int v : victims) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("delete_vertices: vertex out of range");
    }
    if (w.alive(v)) w.remove_vertex(v);
  }
  DeleteResult out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (w.alive(v) && w.degree(v) == 0) {
      bool was_victim = std::find(victims.begin(), victims.end(), v) != victims.end();
      if (!was_victim) {
        out.dropped_isolated.push_back(v);
        w.remove_vertex(v);
      }
    }
  }
  out.graph = w.to_graph(&out.kept_old_ids);
  return out;
}

namespace {

ReduceResult reduce_impl(const Graph& g, std::mt19937* rng) {
  WorkGraph w = WorkGraph::of(g);
  ReduceResult out;
  for (;;) {
    int v = -1;
    if (rng == nullptr) {
      for (int u = 0; u < g.vertex_count(); ++u) {
        if (w.alive(u) && w.degree(u) <= 2) { v = u; break; }
      }
    } else {
      int qualifying[kMaxVertices];
      int count = 0;
      for (int u = 0; u < g.vertex_count(); ++u) {
        if (w.alive(u) && w.degree(u) <= 2) qualifying[count++] = u;
      }
      if (count > 0) v = qualifying[(*rng)() % count];
    }
    if (v == -1) break;
    if (w.degree(v) == 0) {
      out.removals.emplace_back(v, RemovalReason::kIsolated);
      w.remove_vertex(v);
    } else if (w.degree(v) == 1) {
      out.removals.emplace_back(v, RemovalReason::kDegree1Prune);
      w.remove_vertex(v);
    } else {
      // Degree 2: either one neighbor carrying both edge slots (drop vertex
      // and both edges, keeping no loop) or two neighbors to bridge.
      int x = -1, y = -1;
      for (int u = 0; u < g.vertex_count(); ++u) {
        int m = w.mult(v, u);
        if (m == 2) { x = y = u; break; }
        if (m == 1) { (x == -1 ? x : y) = u; }
      }
      out.removals.emplace_back(v, RemovalReason::kDegree2Suppress);
      w.remove_vertex(v);
      if (x != y) w.add_edge(x, y);
    }
  }
  out.graph = w.to_graph(&out.kept_old_ids);
  if (out.graph.vertex_count() > 0 && out.graph.min_degree() < 3) {
    throw std::logic_error("reduce: output violates min degree 3");
  }
  return out;
}

}  // namespace

ReduceResult reduce(const Graph& g) { return reduce_impl(g, nullptr); }

namespace detail {
ReduceResult reduce_shuffled(const Graph& g, uint32_t seed) {
  std::mt19937 rng(seed);
  return reduce_impl(g, &rng);
}
}  // namespace detail

std::pair<Graph, ReductionTrace> hat(const Graph& g, int a, int b) {
  const int n = g.vertex_count();
  if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
    throw std::invalid_argument("hat: invalid vertex pair");
  }
  ReductionTrace t;
  t.removed_pair = {a, b};
  t.ne = g.degree(a) + g.degree(b) - g.multiplicity(a, b);
  // NV3 = |V3(a) u V3(b)|, NV4 = |V4(a) n V4(b)|.
  for (int v = 0; v < n; ++v) {
    if (v == a || v == b) continue;
    bool na = g.adjacent(v, a), nb = g.adjacent(v, b);
    if (g.degree(v) == 3 && (na || nb)) ++t.nv3;
    if (g.degree(v) == 4 && na && nb) ++t.nv4;
  }
  const int victims[2] = {a, b};
  DeleteResult del = delete_vertices(g, victims);
  ReduceResult red = reduce(del.graph);

  t.removed_vertices.emplace_back(a, RemovalReason::kDeletedWithPair);
  t.removed_vertices.emplace_back(b, RemovalReason::kDeletedWithPair);
  for (int v : del.dropped_isolated) {
    t.removed_vertices.emplace_back(v, RemovalReason::kIsolated);
  }
  for (auto [v, reason] : red.removals) {
    t.removed_vertices.emplace_back(del.kept_old_ids[v], reason);
  }
  for (auto [v, reason] : t.removed_vertices) {
    if (v == a || v == b) continue;
    if (!g.adjacent(v, a) && !g.adjacent(v, b)) ++t.nvy;
  }
  t.predicted_edges = g.edge_count() - t.ne - t.nv3 - t.nv4 - t.nvy;
  t.actual_edges = red.graph.edge_count();
  return {red.graph, std::move(t)};
}

std::vector<CountAuditRow> audit_count_equation(const Graph& g) {
  std::vector<CountAuditRow> out;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      auto [ghat, trace] = hat(g, a, b);
      out.push_back({{a, b}, trace.predicted_edges, trace.actual_edges});
    }
  }
  return out;
}

}  // namespace knotsieve
