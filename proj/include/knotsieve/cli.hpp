#pragma once

#include <string>

namespace knotsieve {

// Exit codes shared by every subcommand: 0 success (or "found"), 1 negative
// result (minor absent, verification mismatch), 2 usage or input errors.
struct RunConfig {
  int edge_budget = 23;
  int min_degree = 3;
  int jobs = 0;  // 0: use hardware parallelism
  std::string cache_dir;
  std::string out_dir;
  bool connected_only = true;
};

// Streams every combination's graph6 lines: into per-combination cache files
// under cache_dir (resumable; completed files are skipped), or to stdout
// when no cache_dir is configured.
int cmd_enumerate(const RunConfig& config);

// Full sieve; writes verdicts.tsv and summary.txt under out_dir (when set)
// and prints the summary.
int cmd_sieve(const RunConfig& config);

// Runs the sieve and checks the result against the known classification for
// the configured budget (23 by default: exactly six intrinsically knotted
// graphs, four over the Heawood graph and two over Cousin 110).
int cmd_verify_theorem(const RunConfig& config);

// Prints one graph6 line per family member plus "family <seed> size <n>".
int cmd_families(const std::string& seed_name);

// Prints a delete/contract witness script or "none".
int cmd_minor(const std::string& host_g6, const std::string& target_g6);

// Prints the reduced graph for one vertex pair plus its trace fields.
int cmd_simplify(const std::string& g6, int a, int b);

}  // namespace knotsieve
