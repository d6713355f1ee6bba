#include "knotsieve/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "check.hpp"

namespace knotsieve {

DegreeCombination DegreeCombination::normalized(std::vector<int> a,
                                                std::vector<int> b) {
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  DegreeCombination dc;
  if (a >= b) {
    dc.deg_a = std::move(a);
    dc.deg_b = std::move(b);
  } else {
    dc.deg_a = std::move(b);
    dc.deg_b = std::move(a);
  }
  return dc;
}

int DegreeCombination::edge_budget() const {
  return std::accumulate(deg_a.begin(), deg_a.end(), 0);
}

std::string DegreeCombination::label() const {
  std::string out = "A";
  for (size_t i = 0; i < deg_a.size(); ++i) {
    if (i > 0) out.push_back('.');
    out += std::to_string(deg_a[i]);
  }
  out += "_B";
  for (size_t i = 0; i < deg_b.size(); ++i) {
    if (i > 0) out.push_back('.');
    out += std::to_string(deg_b[i]);
  }
  return out;
}

namespace {

// All descending multisets of `size` entries in [lo, hi] summing to `total`.
void gen_multisets(int size, int total, int lo, int hi,
                   std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (size == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  int cap = cur.empty() ? hi : std::min(hi, cur.back());
  for (int d = std::min(cap, total); d >= lo; --d) {
    if (d * size < total) break;  // even the max can no longer reach total
    cur.push_back(d);
    gen_multisets(size - 1, total - d, lo, d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DegreeCombination> degree_combinations(int edge_budget,
                                                   int min_degree) {
  std::set<DegreeCombination> combos;
  if (edge_budget < 1 || min_degree < 1) return {};
  const int max_part = edge_budget / min_degree;
  for (int na = 1; na <= max_part && na <= kMaxVertices; ++na) {
    for (int nb = 1; nb <= max_part && na + nb <= kMaxVertices; ++nb) {
      // Simple bipartite graphs only: degrees are capped by the opposite
      // part size.
      if (min_degree > nb || min_degree > na) continue;
      std::vector<std::vector<int>> as, bs;
      std::vector<int> scratch;
      gen_multisets(na, edge_budget, min_degree, nb, scratch, as);
      if (as.empty()) continue;
      gen_multisets(nb, edge_budget, min_degree, na, scratch, bs);
      for (const auto& a : as) {
        for (const auto& b : bs) {
          combos.insert(DegreeCombination::normalized(a, b));
        }
      }
    }
  }
  return {combos.begin(), combos.end()};
}

namespace {

constexpr int kMaxPart = 16;

// Row-by-row biadjacency generator. Rows and columns are sorted by degree
// descending. Two symmetry rules keep the output near one matrix per
// isomorphism class without losing any class:
//   - rows of equal degree are generated with non-increasing bit masks;
//   - within every run of columns that are still interchangeable (equal
//     degree and identical incidence in the rows placed so far), a row picks
//     a prefix of the run.
// Canonical-code dedup downstream removes what symmetry pruning misses.
class BipartiteGen {
 public:
  BipartiteGen(const DegreeCombination& dc,
               const std::function<void(Graph&&)>& emit)
      : emit_(emit) {
    nr_ = static_cast<int>(dc.deg_a.size());
    nc_ = static_cast<int>(dc.deg_b.size());
    KS_CHECK(nr_ <= kMaxPart && nc_ <= kMaxPart, "part size exceeds generator cap");
    for (int i = 0; i < nr_; ++i) rowdeg_[i] = dc.deg_a[i];
    for (int j = 0; j < nc_; ++j) coldeg_[j] = dc.deg_b[j];
  }

  void run() {
    for (int j = 0; j < nc_; ++j) {
      placed_[j] = 0;
      group_[j] = (j > 0 && coldeg_[j] == coldeg_[j - 1]) ? group_[j - 1] : j;
    }
    gen_row(0);
  }

 private:
  struct Block {
    int lo, hi, cap;
  };

  void gen_row(int r) {
    if (r == nr_) {
      emit_row_result();
      return;
    }
    // Current column blocks, left to right.
    nblocks_ = 0;
    for (int j = 0; j < nc_;) {
      int k = j;
      while (k < nc_ && group_[k] == group_[j]) ++k;
      blocks_[nblocks_++] = {j, k, coldeg_[j] - placed_[j]};
      j = k;
    }
    suffix_room_[nblocks_] = 0;
    for (int b = nblocks_ - 1; b >= 0; --b) {
      suffix_room_[b] = suffix_room_[b + 1] +
                        (blocks_[b].cap > 0 ? blocks_[b].hi - blocks_[b].lo : 0);
    }
    rec_block(r, 0, rowdeg_[r], 0);
  }

  void rec_block(int r, int b, int need, uint32_t mask) {
    if (need > suffix_room_[b]) return;
    if (b == nblocks_) {
      finish_row(r, mask);
      return;
    }
    const Block& blk = blocks_[b];
    int top = blk.cap > 0 ? std::min(blk.hi - blk.lo, need) : 0;
    for (int k = top; k >= 0; --k) {
      uint32_t m = mask;
      for (int j = blk.lo; j < blk.lo + k; ++j) m |= bit(j);
      rec_block(r, b + 1, need - k, m);
    }
  }

  void finish_row(int r, uint32_t mask) {
    if (r > 0 && rowdeg_[r] == rowdeg_[r - 1] && mask > row_mask_[r - 1]) return;
    // Column feasibility for the remaining rows.
    const int rows_left = nr_ - r - 1;
    int open_cols = 0;
    for (int j = 0; j < nc_; ++j) {
      int p = placed_[j] + ((mask >> (nc_ - 1 - j)) & 1);
      int residual = coldeg_[j] - p;
      if (residual < 0 || residual > rows_left) return;
      if (residual > 0) ++open_cols;
    }
    if (rows_left > 0 && rowdeg_[r + 1] > open_cols) return;

    row_mask_[r] = mask;
    std::array<int, kMaxPart> saved_group{};
    for (int j = 0; j < nc_; ++j) {
      saved_group[j] = group_[j];
      if ((mask >> (nc_ - 1 - j)) & 1) ++placed_[j];
    }
    // Refine groups: within a block, selected columns (a prefix) part ways
    // with unselected ones.
    for (int j = 0; j < nc_; ++j) {
      bool sel = (mask >> (nc_ - 1 - j)) & 1;
      bool boundary = j == 0 || saved_group[j] != saved_group[j - 1] ||
                      (((mask >> (nc_ - j)) & 1) != 0) != sel;
      group_[j] = boundary ? j : group_[j - 1];
    }
    gen_row(r + 1);
    for (int j = 0; j < nc_; ++j) {
      group_[j] = saved_group[j];
      if ((mask >> (nc_ - 1 - j)) & 1) --placed_[j];
    }
  }

  void emit_row_result() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nr_; ++i) {
      for (int j = 0; j < nc_; ++j) {
        if ((row_mask_[i] >> (nc_ - 1 - j)) & 1) edges.emplace_back(i, nr_ + j);
      }
    }
    emit_(Graph::bipartite(nr_, nc_, edges));
  }

  uint32_t bit(int col) const { return uint32_t{1} << (nc_ - 1 - col); }

  const std::function<void(Graph&&)>& emit_;
  int nr_ = 0, nc_ = 0;
  int rowdeg_[kMaxPart] = {}, coldeg_[kMaxPart] = {};
  int placed_[kMaxPart] = {};
  int group_[kMaxPart] = {};
  uint32_t row_mask_[kMaxPart] = {};
  Block blocks_[kMaxPart + 1] = {};
  int suffix_room_[kMaxPart + 2] = {};
  int nblocks_ = 0;
};

}  // namespace

std::vector<EnumeratedClass> enumerate_bipartite(const DegreeCombination& dc) {
  KS_CHECK(dc.edge_budget() ==
               std::accumulate(dc.deg_b.begin(), dc.deg_b.end(), 0),
           "degree combination sides disagree on the edge count");
  std::map<CanonicalCode, Graph> classes;
  std::vector<int> want;
  want.insert(want.end(), dc.deg_a.begin(), dc.deg_a.end());
  want.insert(want.end(), dc.deg_b.begin(), dc.deg_b.end());
  std::sort(want.rbegin(), want.rend());

  std::function<void(Graph&&)> emit = [&](Graph&& g) {
    KS_CHECK(g.degree_multiset() == want,
             "generated graph violates the degree combination");
    CanonicalCode code = canonical_code(g);
    classes.emplace(std::move(code), std::move(g));
  };
  BipartiteGen(dc, emit).run();

  std::vector<EnumeratedClass> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back({g, code});
  return out;
}

bool combination_owns(const DegreeCombination& dc, const Graph& g) {
  auto comps = g.components();
  if (comps.size() <= 1) return true;
  // Per-component degree multiset pair, in the component's own 2-coloring.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> split;
  auto parts = bipartition(g);
  KS_CHECK(parts.has_value(), "domain graph is not bipartite");
  std::vector<int> side(g.vertex_count());
  for (int v : parts->first) side[v] = 0;
  for (int v : parts->second) side[v] = 1;
  for (const auto& comp : comps) {
    std::vector<int> da, db;
    for (int v : comp) (side[v] == 0 ? da : db).push_back(g.degree(v));
    split.emplace_back(std::move(da), std::move(db));
  }
  DegreeCombination best;
  const size_t c = split.size();
  for (size_t flip = 0; flip < (size_t{1} << c); ++flip) {
    std::vector<int> a, b;
    for (size_t i = 0; i < c; ++i) {
      const auto& [da, db] = split[i];
      const auto& to_a = (flip >> i) & 1 ? db : da;
      const auto& to_b = (flip >> i) & 1 ? da : db;
      a.insert(a.end(), to_a.begin(), to_a.end());
      b.insert(b.end(), to_b.begin(), to_b.end());
    }
    DegreeCombination cand = DegreeCombination::normalized(a, b);
    if (flip == 0 || best < cand) best = std::move(cand);
  }
  return best == dc;
}

void enumerate_domain(
    int edge_budget, int min_degree, bool connected_only,
    const std::function<void(const DegreeCombination&, const EnumeratedClass&)>&
        sink) {
  for (const DegreeCombination& dc : degree_combinations(edge_budget, min_degree)) {
    for (const EnumeratedClass& cls : enumerate_bipartite(dc)) {
      if (cls.graph.is_connected()) {
        sink(dc, cls);
      } else if (!connected_only && combination_owns(dc, cls.graph)) {
        sink(dc, cls);
      }
    }
  }
}

}  // namespace knotsieve
