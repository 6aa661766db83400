// netbandit command-line front end: run experiments, print theorem bounds,
// generate relation graphs, and reproduce the named experiment presets.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netbandit/env.hpp"
#include "netbandit/graph.hpp"
#include "netbandit/io.hpp"
#include "netbandit/regret.hpp"
#include "netbandit/sim.hpp"
#include "netbandit/strategies.hpp"

namespace nb = netbandit;

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto pos = s.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

/// Theorem bound at horizon n for the batch's seed-0 environment; feeds the
/// plot's reference line.
double reference_bound(const nb::BatchConfig& cfg) {
  nb::RelationGraph g = nb::resolve_graph(cfg.graph_spec, cfg.num_arms,
                                          nb::derive_graph_seed(cfg.master_seed, 0));
  std::vector<double> means =
      cfg.fixed_means ? *cfg.fixed_means
                      : nb::draw_uniform_means(cfg.num_arms,
                                               nb::derive_means_seed(cfg.master_seed, 0));
  nb::BanditEnv env(means, cfg.dist, 0);
  auto fs = nb::resolve_strategies(cfg.strategy_spec, g);
  nb::ScenarioOptimum opt =
      nb::compute_optimum(env, g, fs ? &*fs : nullptr, cfg.scenario);
  switch (cfg.scenario) {
    case nb::Scenario::SSO:
      return nb::bound_sso(cfg.horizon, cfg.num_arms,
                           nb::clique_count_for_bound(g, opt.gaps, cfg.horizon));
    case nb::Scenario::CSO: {
      nb::StrategyGraph sg = nb::build_strategy_graph(*fs, g);
      return nb::bound_cso(cfg.horizon, fs->size(),
                           nb::clique_count_for_bound(sg.graph, opt.gaps, cfg.horizon));
    }
    case nb::Scenario::SSR:
      return nb::bound_ssr(cfg.horizon, cfg.num_arms);
    case nb::Scenario::CSR:
      return nb::bound_csr(cfg.horizon, cfg.num_arms, fs->max_y_size);
  }
  return 0.0;
}

int execute_batch(const nb::BatchConfig& cfg, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  nb::BatchResult result = nb::run_batch(cfg);
  double bound = reference_bound(cfg);
  nb::emit_csv(result, out_dir + "/regret.csv");
  nb::emit_plot_script(result, out_dir + "/plot.gp", bound);
  nb::write_manifest(cfg, out_dir, out_dir + "/manifest.json");
  std::printf("scenario=%s n=%ld K=%d graph=%s seeds=%d\n",
              nb::scenario_name(cfg.scenario).c_str(), cfg.horizon, cfg.num_arms,
              cfg.graph_spec.c_str(), cfg.num_seeds);
  std::printf("theorem bound at n: %.10g\n", bound);
  for (const auto& agg : result.aggregates) {
    std::printf("%-10s mean cum regret at n = %.6g, mean avg regret at n = %.6g\n",
                agg.policy.c_str(), agg.mean_cum.back(), agg.mean_avg.back());
  }
  std::printf("wrote %s/regret.csv, plot.gp, manifest.json\n", out_dir.c_str());
  return 0;
}

nb::BatchConfig preset_config(const std::string& name) {
  nb::BatchConfig cfg;
  cfg.horizon = 10000;
  cfg.num_seeds = 20;
  cfg.master_seed = 1;
  if (name == "fig-sso-vs-moss") {
    cfg.scenario = nb::Scenario::SSO;
    cfg.policies = {"dfl-sso", "moss"};
    cfg.num_arms = 100;
    cfg.graph_spec = "er:0.3";
  } else if (name == "fig-cso-sparse") {
    cfg.scenario = nb::Scenario::CSO;
    cfg.policies = {"dfl-cso"};
    cfg.num_arms = 15;
    cfg.graph_spec = "er:0.3";
    cfg.strategy_spec = "indep:2";
  } else if (name == "fig-cso-dense") {
    cfg.scenario = nb::Scenario::CSO;
    cfg.policies = {"dfl-cso"};
    cfg.num_arms = 15;
    cfg.graph_spec = "er:0.6";
    cfg.strategy_spec = "indep:2";
  } else if (name == "fig-ssr") {
    cfg.scenario = nb::Scenario::SSR;
    cfg.policies = {"dfl-ssr"};
    cfg.num_arms = 100;
    cfg.graph_spec = "er:0.3";
  } else if (name == "fig-csr") {
    cfg.scenario = nb::Scenario::CSR;
    cfg.policies = {"dfl-csr"};
    cfg.num_arms = 4;
    cfg.graph_spec = "path";
    cfg.strategy_spec = "indep:2";
  } else {
    throw CLI::ValidationError("preset", "unknown preset: " + name);
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netbandit: graph-aware stochastic bandit engine"};
  app.require_subcommand(1);

  // --- run -------------------------------------------------------------
  auto* run = app.add_subcommand("run", "execute a Monte-Carlo batch");
  std::string scenario = "sso", policies = "dfl-sso", graph_spec = "er:0.3";
  std::string strategy_spec, dist = "bernoulli", means_file, out_dir = "out";
  int arms = 100, seeds = 20, checkpoints = 200, threads = 0;
  long horizon = 10000;
  std::uint64_t master_seed = 1;
  bool cso_literal_k = false, no_ssr_normalize = false;
  run->add_option("--scenario", scenario, "sso|cso|ssr|csr");
  run->add_option("--policy", policies, "comma-separated policy names");
  run->add_option("--arms", arms, "number of arms K");
  run->add_option("--graph", graph_spec, "er:<p>|complete|path|file:<path>");
  run->add_option("--strategies", strategy_spec,
                  "indep:<M>|all:<M>|exact:<M>|file:<path> (combinatorial scenarios)");
  run->add_option("--horizon", horizon, "rounds per episode n");
  run->add_option("--seeds", seeds, "number of Monte-Carlo seeds");
  run->add_option("--master-seed", master_seed, "master seed");
  run->add_option("--dist", dist, "bernoulli|uniform|point-mass");
  run->add_option("--means-file", means_file, "fixed means, one decimal per line");
  run->add_option("--checkpoints", checkpoints, "log-spaced checkpoint count");
  run->add_option("--threads", threads, "worker threads (0 = auto)");
  run->add_option("--out", out_dir, "output directory");
  run->add_flag("--cso-literal-k", cso_literal_k, "use K instead of |F| in the CSO index");
  run->add_flag("--no-ssr-normalize", no_ssr_normalize,
                "disable K-normalization inside the SSR index");

  // --- bounds ----------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "print the theorem bound for a config");
  std::string b_scenario = "sso";
  int b_arms = 100, b_max_y = 1;
  long b_horizon = 10000;
  std::size_t b_cliques = 0, b_fsize = 1;
  bounds->add_option("--scenario", b_scenario, "sso|cso|ssr|csr");
  bounds->add_option("--arms", b_arms, "number of arms K");
  bounds->add_option("--horizon", b_horizon, "horizon n");
  bounds->add_option("--cliques", b_cliques, "clique cover size |C| (sso/cso)");
  bounds->add_option("--f-size", b_fsize, "strategy set size |F| (cso)");
  bounds->add_option("--max-y", b_max_y, "N = max |Y_x| (csr)");

  // --- preset ----------------------------------------------------------
  auto* preset = app.add_subcommand("preset", "run a named experiment");
  std::string preset_name;
  std::string preset_out;
  std::uint64_t preset_seed = 1;
  int preset_threads = 0;
  preset->add_option("name", preset_name,
                     "fig-sso-vs-moss|fig-cso-sparse|fig-cso-dense|fig-ssr|fig-csr")
      ->required();
  preset->add_option("--out", preset_out, "output directory (default out/<name>)");
  preset->add_option("--master-seed", preset_seed, "master seed");
  preset->add_option("--threads", preset_threads, "worker threads (0 = auto)");

  // --- graph -----------------------------------------------------------
  auto* graph = app.add_subcommand("graph", "generate or inspect a relation graph");
  std::string g_spec = "er:0.3", g_out;
  int g_arms = 100;
  std::uint64_t g_seed = 1;
  graph->add_option("--arms", g_arms, "number of arms K");
  graph->add_option("--graph", g_spec, "er:<p>|complete|path|file:<path>");
  graph->add_option("--seed", g_seed, "generator seed (er graphs)");
  graph->add_option("--out", g_out, "write edge-list file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) {
      nb::BatchConfig cfg;
      cfg.scenario = nb::scenario_from_name(scenario);
      cfg.policies = split_csv(policies);
      cfg.horizon = horizon;
      cfg.num_arms = arms;
      cfg.graph_spec = graph_spec;
      cfg.strategy_spec = strategy_spec;
      cfg.dist = nb::dist_from_name(dist);
      if (!means_file.empty()) cfg.fixed_means = nb::read_means_file(means_file);
      cfg.master_seed = master_seed;
      cfg.num_seeds = seeds;
      cfg.num_checkpoints = checkpoints;
      cfg.threads = threads;
      cfg.policy_options.cso_literal_k = cso_literal_k;
      cfg.policy_options.ssr_normalize = !no_ssr_normalize;
      return execute_batch(cfg, out_dir);
    }
    if (*bounds) {
      double v = 0.0;
      switch (nb::scenario_from_name(b_scenario)) {
        case nb::Scenario::SSO: v = nb::bound_sso(b_horizon, b_arms, b_cliques); break;
        case nb::Scenario::CSO: v = nb::bound_cso(b_horizon, b_fsize, b_cliques); break;
        case nb::Scenario::SSR: v = nb::bound_ssr(b_horizon, b_arms); break;
        case nb::Scenario::CSR: v = nb::bound_csr(b_horizon, b_arms, b_max_y); break;
      }
      std::printf("%.10g\n", v);
      return 0;
    }
    if (*preset) {
      nb::BatchConfig cfg = preset_config(preset_name);
      cfg.master_seed = preset_seed;
      cfg.threads = preset_threads;
      if (preset_out.empty()) preset_out = "out/" + preset_name;
      return execute_batch(cfg, preset_out);
    }
    if (*graph) {
      nb::RelationGraph g = nb::resolve_graph(g_spec, g_arms, g_seed);
      auto cover = nb::greedy_clique_cover(g);
      std::printf("arms=%d edges=%zu greedy_clique_cover=%zu\n", g.num_arms(),
                  g.num_edges(), cover.size());
      if (!g_out.empty()) {
        nb::write_edge_list_file(g, g_out);
        std::printf("wrote %s\n", g_out.c_str());
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 1;
}
