#include <string>

#include <CLI11.hpp>

#include "knotsieve/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "knotsieve: exhaustive classification of small bipartite intrinsically "
      "knotted graphs via the 2-apex planarity sieve"};
  app.require_subcommand(1);

  knotsieve::RunConfig config;
  bool include_disconnected = false;

  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--edges", config.edge_budget, "edge budget")
        ->capture_default_str();
    cmd->add_option("--min-degree", config.min_degree, "minimum vertex degree")
        ->capture_default_str();
    cmd->add_option("--jobs", config.jobs,
                    "worker threads (0 = hardware parallelism)")
        ->capture_default_str();
    cmd->add_option("--cache-dir", config.cache_dir,
                    "per-combination graph6 cache directory");
    cmd->add_flag("--include-disconnected", include_disconnected,
                  "keep disconnected graphs in the domain");
  };

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "generate the search space as graph6 lines");
  add_run_flags(enumerate);

  CLI::App* sieve = app.add_subcommand(
      "sieve", "classify every graph in the search space");
  add_run_flags(sieve);
  sieve->add_option("--out", config.out_dir, "directory for verdicts.tsv and summary.txt");

  CLI::App* verify = app.add_subcommand(
      "verify-theorem", "run the sieve and check the known classification");
  add_run_flags(verify);
  verify->add_option("--out", config.out_dir, "directory for verdicts.tsv and summary.txt");

  std::string seed_name;
  CLI::App* families = app.add_subcommand(
      "families", "list a named graph's cousin family");
  families->add_option("seed", seed_name,
                       "K7, K5, K33, K55, K3311, HEAWOOD or COUSIN110")
      ->required();

  std::string host_g6, target_g6;
  CLI::App* minor = app.add_subcommand("minor", "minor containment witness");
  minor->add_option("host", host_g6, "host graph, graph6")->required();
  minor->add_option("target", target_g6, "target graph, graph6")->required();

  std::string simplify_g6;
  int va = 0, vb = 0;
  CLI::App* simplify = app.add_subcommand(
      "simplify", "reduced graph and count-equation trace for one pair");
  simplify->add_option("graph", simplify_g6, "graph, graph6")->required();
  simplify->add_option("a", va, "first vertex")->required();
  simplify->add_option("b", vb, "second vertex")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  config.connected_only = !include_disconnected;

  if (enumerate->parsed()) return knotsieve::cmd_enumerate(config);
  if (sieve->parsed()) return knotsieve::cmd_sieve(config);
  if (verify->parsed()) return knotsieve::cmd_verify_theorem(config);
  if (families->parsed()) return knotsieve::cmd_families(seed_name);
  if (minor->parsed()) return knotsieve::cmd_minor(host_g6, target_g6);
  if (simplify->parsed()) return knotsieve::cmd_simplify(simplify_g6, va, vb);
  return 2;
}
