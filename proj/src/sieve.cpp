#include "knotsieve/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "check.hpp"
#include "knotsieve/graph6.hpp"
#include "knotsieve/simplify.hpp"

namespace knotsieve {

const char* to_string(SieveOutcome o) {
  switch (o) {
    case SieveOutcome::kEliminated: return "ELIMINATED";
    case SieveOutcome::kIkByMinor: return "IK_BY_MINOR";
    case SieveOutcome::kUndetermined: return "UNDETERMINED";
    case SieveOutcome::kNotIkComponentBound: return "NOT_IK_COMPONENT_BOUND";
  }
  return "?";
}

namespace {

uint64_t fnv1a(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Shared pair loop for two_apex_witness and sieve_graph.
std::optional<std::pair<int, int>> scan_pairs(const Graph& g,
                                              std::vector<PairHatRow>* rows,
                                              int* mismatches) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      auto [ghat, trace] = hat(g, a, b);
      Prop21Verdict v = prop21_classify(ghat);
      if (rows != nullptr) {
        rows->push_back({a, b, trace.predicted_edges, trace.actual_edges, v});
      }
      if (mismatches != nullptr && trace.predicted_edges != trace.actual_edges) {
        ++*mismatches;
      }
      if (v == Prop21Verdict::kPlanar) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<int, int>> two_apex_witness(const Graph& g) {
  return scan_pairs(g, nullptr, nullptr);
}

SieveVerdict sieve_graph(const Graph& g) {
  SieveVerdict verdict;
  verdict.graph_code = canonical_code(g);
  verdict.witness_pair = scan_pairs(g, &verdict.hat_summary, &verdict.count_mismatches);
  if (verdict.witness_pair.has_value()) {
    verdict.outcome = SieveOutcome::kEliminated;
    return verdict;
  }
  if (auto ik = ik_by_catalog(g)) {
    verdict.outcome = SieveOutcome::kIkByMinor;
    verdict.ik_witness = std::move(ik);
  } else {
    verdict.outcome = SieveOutcome::kUndetermined;
  }
  return verdict;
}

namespace {

constexpr int64_t kAuditSelector = 16;  // audit every graph whose hash % 16 == 0
constexpr int64_t kSpotSelector = 100;  // re-verify 1% of eliminations

struct ComboResult {
  ComboStats stats;
  std::vector<IkEntry> ik;
  std::vector<UndeterminedEntry> undetermined;
  int64_t mismatches = 0;
  std::vector<std::string> mismatch_examples;
  int64_t audited = 0;
  int64_t spot_checks = 0;
  int64_t spot_failures = 0;
  std::vector<std::string> rows;
  std::string error;
};

bool all_components_below_21_edges(const Graph& g) {
  for (const auto& comp : g.components()) {
    int edges = 0;
    for (int v : comp) edges += g.degree(v);
    if (edges / 2 >= 21) return false;
  }
  return true;
}

std::string witness_column(const SieveVerdict& v) {
  switch (v.outcome) {
    case SieveOutcome::kEliminated: {
      auto [a, b] = *v.witness_pair;
      return "pair " + std::to_string(a) + "," + std::to_string(b);
    }
    case SieveOutcome::kIkByMinor: {
      const auto& [name, witness] = *v.ik_witness;
      int dels = 0;
      for (const MinorOp& op : witness.script) {
        dels += op.kind == MinorOpKind::kDeleteEdge;
      }
      return name + " delete " + std::to_string(dels);
    }
    case SieveOutcome::kNotIkComponentBound:
      return "component edge bound";
    case SieveOutcome::kUndetermined:
      return "-";
  }
  return "-";
}

}  // namespace

// Cache contents are flag-independent: every isomorphism class of the
// combination, connected or not; consumers filter.
std::vector<EnumeratedClass> combination_classes(const DegreeCombination& dc,
                                                 const SieveOptions& opts) {
  namespace fs = std::filesystem;
  if (opts.cache_dir.empty()) return enumerate_bipartite(dc);
  fs::path file = fs::path(opts.cache_dir) / dc.cache_file_name();
  std::string header = "#knotsieve edges=" + std::to_string(dc.edge_budget()) +
                       " combo=" + dc.label();
  if (fs::exists(file)) {
    std::ifstream in(file);
    std::string line;
    std::vector<std::string> lines;
    bool done = false;
    if (std::getline(in, line) && line == header) {
      while (std::getline(in, line)) {
        if (line.rfind("#done ", 0) == 0) {
          done = std::stoll(line.substr(6)) == static_cast<long long>(lines.size());
          break;
        }
        lines.push_back(line);
      }
    }
    if (done) {
      std::vector<EnumeratedClass> out;
      out.reserve(lines.size());
      for (const std::string& g6 : lines) {
        Graph g = decode_graph6(g6);
        out.push_back({g, canonical_code(g)});
      }
      return out;
    }
    // Missing or wrong terminal marker: the file is partial; regenerate.
  }
  std::vector<EnumeratedClass> classes = enumerate_bipartite(dc);
  fs::create_directories(file.parent_path());
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << header << "\n";
    for (const EnumeratedClass& c : classes) out << encode_graph6(c.graph) << "\n";
    out << "#done " << classes.size() << "\n";
  }
  fs::rename(tmp, file);
  return classes;
}

namespace {

ComboResult sieve_combination(const DegreeCombination& dc,
                              const SieveOptions& opts) {
  ComboResult r;
  r.stats.dc = dc;
  for (const EnumeratedClass& cls : combination_classes(dc, opts)) {
    const Graph& g = cls.graph;
    if (!g.is_connected()) {
      if (!opts.include_disconnected || !combination_owns(dc, g)) continue;
      if (all_components_below_21_edges(g)) {
        ++r.stats.classes;
        ++r.stats.component_bound;
        if (opts.collect_rows) {
          SieveVerdict v;
          v.outcome = SieveOutcome::kNotIkComponentBound;
          r.rows.push_back(encode_graph6(g) + "\t" + to_string(v.outcome) +
                           "\t" + witness_column(v));
        }
        continue;
      }
      // A component at or above 21 edges could in principle be knotted;
      // fall through to the full sieve.
    }
    ++r.stats.classes;
    SieveVerdict v = sieve_graph(g);
    r.mismatches += v.count_mismatches;
    if (v.count_mismatches > 0 && r.mismatch_examples.size() < 8) {
      r.mismatch_examples.push_back(encode_graph6(g));
    }
    const uint64_t h = fnv1a(cls.code.bytes);
    if (h % kAuditSelector == 0) {
      ++r.audited;
      for (const CountAuditRow& row : audit_count_equation(g)) {
        if (row.predicted != row.actual) {
          ++r.mismatches;
          if (r.mismatch_examples.size() < 8) {
            r.mismatch_examples.push_back(encode_graph6(g));
          }
        }
      }
    }
    switch (v.outcome) {
      case SieveOutcome::kEliminated: {
        ++r.stats.eliminated;
        if (h % kSpotSelector == 0) {
          ++r.spot_checks;
          auto [a, b] = *v.witness_pair;
          auto [ghat, trace] = hat(g, a, b);
          if (!is_planar(ghat)) ++r.spot_failures;
        }
        break;
      }
      case SieveOutcome::kIkByMinor: {
        ++r.stats.ik;
        IkEntry entry;
        entry.graph6 = encode_graph6(g);
        entry.dc = dc;
        entry.parent = v.ik_witness->first;
        for (const MinorOp& op : v.ik_witness->second.script) {
          entry.edge_deletions += op.kind == MinorOpKind::kDeleteEdge;
        }
        // Corollary check: some proper subgraph with one edge fewer is
        // still certified IK, so g is not minor minimal.
        auto edges = g.edge_list();
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (auto [u, w] : edges) {
          MinorOp del{MinorOpKind::kDeleteEdge, u, w};
          Graph sub = apply_minor_ops(g, std::span<const MinorOp>(&del, 1));
          if (ik_by_catalog(sub).has_value()) {
            entry.corollary_ok = true;
            break;
          }
        }
        r.ik.push_back(std::move(entry));
        break;
      }
      case SieveOutcome::kUndetermined:
        ++r.stats.undetermined;
        r.undetermined.push_back({encode_graph6(g), dc});
        break;
      case SieveOutcome::kNotIkComponentBound:
        break;  // handled above
    }
    if (opts.collect_rows) {
      r.rows.push_back(encode_graph6(g) + "\t" + to_string(v.outcome) + "\t" +
                       witness_column(v));
    }
  }
  return r;
}

}  // namespace

TheoremReport run_theorem(const SieveOptions& opts) {
  std::vector<DegreeCombination> combos =
      degree_combinations(opts.edge_budget, opts.min_degree);
  std::vector<ComboResult> results(combos.size());

  int jobs = opts.jobs;
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(combos.size())));

  std::atomic<size_t> next{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= combos.size()) break;
      try {
        results[i] = sieve_combination(combos[i], opts);
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
      if (opts.progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        opts.progress(combos[i], results[i].stats);
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  TheoremReport report;
  report.edge_budget = opts.edge_budget;
  report.min_degree = opts.min_degree;
  for (size_t i = 0; i < combos.size(); ++i) {
    ComboResult& r = results[i];
    if (!r.error.empty()) {
      report.notes += "combination " + combos[i].label() + " failed: " +
                      r.error + "\n";
      continue;
    }
    report.combos.push_back(r.stats);
    report.total_classes += r.stats.classes;
    report.total_eliminated += r.stats.eliminated;
    report.total_component_bound += r.stats.component_bound;
    report.count_mismatches += r.mismatches;
    for (auto& ex : r.mismatch_examples) {
      if (report.mismatch_examples.size() < 8) {
        report.mismatch_examples.push_back(std::move(ex));
      }
    }
    report.audited_graphs += r.audited;
    report.spot_checks += r.spot_checks;
    report.spot_failures += r.spot_failures;
    for (auto& e : r.ik) report.ik_graphs.push_back(std::move(e));
    for (auto& u : r.undetermined) report.undetermined.push_back(std::move(u));
    if (opts.collect_rows) report.rows_per_combo.push_back(std::move(r.rows));
  }
  return report;
}

TheoremReport run_theorem(int edge_budget, int parallelism) {
  SieveOptions opts;
  opts.edge_budget = edge_budget;
  opts.jobs = parallelism;
  return run_theorem(opts);
}

std::string format_report(const TheoremReport& report) {
  std::ostringstream out;
  out << "edge budget " << report.edge_budget << ", min degree "
      << report.min_degree << "\n";
  out << "combination\tclasses\teliminated\tik\tundetermined\tcomponent_bound\n";
  for (const ComboStats& c : report.combos) {
    out << c.dc.label() << "\t" << c.classes << "\t" << c.eliminated << "\t"
        << c.ik << "\t" << c.undetermined << "\t" << c.component_bound << "\n";
  }
  out << "total classes " << report.total_classes << "\n";
  out << "eliminated " << report.total_eliminated << "\n";
  out << "intrinsically knotted " << report.ik_graphs.size() << "\n";
  for (const IkEntry& e : report.ik_graphs) {
    out << "  " << e.graph6 << "\t" << e.dc.label() << "\tcontains " << e.parent
        << " after deleting " << e.edge_deletions << " edge(s)"
        << (e.corollary_ok ? "\tnot minor minimal" : "\tNO IK PROPER SUBGRAPH")
        << "\n";
  }
  out << "undetermined " << report.undetermined.size() << "\n";
  for (const UndeterminedEntry& u : report.undetermined) {
    out << "  " << u.graph6 << "\t" << u.dc.label() << "\n";
  }
  out << "count-equation mismatches " << report.count_mismatches << " (audited "
      << report.audited_graphs << " graphs fully)\n";
  out << "elimination spot checks " << report.spot_checks << ", failures "
      << report.spot_failures << "\n";
  if (!report.notes.empty()) out << report.notes;
  return out.str();
}

}  // namespace knotsieve
