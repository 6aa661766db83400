#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "netbandit/io.hpp"
#include "netbandit/sim.hpp"

using namespace netbandit;

TEST_CASE("checkpoints are log-spaced, unique, and end at n") {
  auto cps = make_checkpoints(10000, 200);
  CHECK(cps.front() == 1);
  CHECK(cps.back() == 10000);
  for (std::size_t i = 1; i < cps.size(); ++i) CHECK(cps[i] > cps[i - 1]);
  CHECK(cps.size() <= 201);

  auto tiny = make_checkpoints(1, 200);
  CHECK(tiny == std::vector<long>{1});
}

TEST_CASE("episode determinism") {
  EpisodeSpec spec;
  spec.scenario = Scenario::SSO;
  spec.policy_name = "dfl-sso";
  spec.num_arms = 10;
  spec.graph_spec = "er:0.4";
  spec.graph_seed = 2;
  spec.means = draw_uniform_means(10, 3);
  spec.env_seed = 4;
  spec.tie_seed = 5;
  spec.horizon = 500;
  auto a = run_episode(spec);
  auto b = run_episode(spec);
  CHECK(a.actions == b.actions);
  CHECK(a.cum_pseudo == b.cum_pseudo);
  CHECK(a.cum_realized == b.cum_realized);
}

TEST_CASE("single arm means zero regret") {
  EpisodeSpec spec;
  spec.scenario = Scenario::SSO;
  spec.policy_name = "dfl-sso";
  spec.num_arms = 1;
  spec.graph_spec = "complete";
  spec.means = {0.4};
  spec.horizon = 100;
  auto trace = run_episode(spec);
  CHECK(trace.cum_pseudo.back() == 0.0);
}

TEST_CASE("random policy's average pseudo-regret matches the mean gap") {
  EpisodeSpec spec;
  spec.scenario = Scenario::SSO;
  spec.policy_name = "random";
  spec.num_arms = 20;
  spec.graph_spec = "er:0.3";
  spec.graph_seed = 8;
  spec.means = draw_uniform_means(20, 44);
  spec.env_seed = 9;
  spec.tie_seed = 10;
  spec.horizon = 10000;
  auto trace = run_episode(spec);
  double mu1 = *std::max_element(spec.means.begin(), spec.means.end());
  double mean_mu = 0;
  for (double m : spec.means) mean_mu += m;
  mean_mu /= spec.means.size();
  double avg = trace.cum_pseudo.back() / spec.horizon;
  CHECK(std::abs(avg - (mu1 - mean_mu)) < 0.02);
}

namespace {

BatchConfig small_batch() {
  BatchConfig cfg;
  cfg.scenario = Scenario::SSO;
  cfg.policies = {"dfl-sso", "moss"};
  cfg.horizon = 400;
  cfg.num_arms = 8;
  cfg.graph_spec = "er:0.4";
  cfg.master_seed = 31;
  cfg.num_seeds = 4;
  cfg.num_checkpoints = 20;
  return cfg;
}

}  // namespace

TEST_CASE("batch CSV is byte-deterministic and thread-count independent") {
  BatchConfig cfg = small_batch();
  cfg.threads = 1;
  std::string a = csv_string(run_batch(cfg));
  cfg.threads = 4;
  std::string b = csv_string(run_batch(cfg));
  CHECK(a == b);
  CHECK(a.substr(0, a.find('\n')) ==
        "policy,seed,t,instant_regret,cum_regret,avg_regret");
}

TEST_CASE("paired seeding: the reward stream is policy-independent") {
  BatchConfig cfg = small_batch();
  cfg.dist = DistKind::PointMass;
  auto result = run_batch(cfg);
  // degenerate env: equal realized cumulative reward whenever actions agree;
  // stronger check: the env seed derivation ignores the policy entirely
  CHECK(derive_env_seed(cfg.master_seed, 0) == derive_env_seed(cfg.master_seed, 0));
  CHECK(derive_tie_seed(cfg.master_seed, 0, "dfl-sso") !=
        derive_tie_seed(cfg.master_seed, 0, "moss"));
  // identical checkpoints across seeds/policies
  for (const auto& e : result.episodes)
    CHECK(e.cum.size() == result.checkpoints.size());
}

TEST_CASE("adding a policy never perturbs existing streams") {
  BatchConfig cfg = small_batch();
  auto base = run_batch(cfg);
  cfg.policies.push_back("random");
  auto extended = run_batch(cfg);
  for (std::size_t i = 0; i < base.episodes.size(); ++i) {
    CHECK(base.episodes[i].policy == extended.episodes[i].policy);
    CHECK(base.episodes[i].cum == extended.episodes[i].cum);
  }
}

TEST_CASE("empty batch result gives a header-only CSV") {
  BatchResult empty;
  empty.checkpoints = {1};
  CHECK(csv_string(empty) == "policy,seed,t,instant_regret,cum_regret,avg_regret\n");
}

TEST_CASE("minimal batch: one policy, one seed, n = 1 -> one data row") {
  BatchConfig cfg;
  cfg.scenario = Scenario::SSO;
  cfg.policies = {"dfl-sso"};
  cfg.horizon = 1;
  cfg.num_arms = 2;
  cfg.graph_spec = "complete";
  cfg.num_seeds = 1;
  cfg.num_checkpoints = 200;
  std::string csv = csv_string(run_batch(cfg));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);  // header + one row
}

TEST_CASE("csv round trip reproduces checkpoint values") {
  BatchConfig cfg = small_batch();
  auto result = run_batch(cfg);
  std::string csv = csv_string(result);
  // parse back and compare against the first episode
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  const auto& e0 = result.episodes[0];
  for (std::size_t c = 0; c < result.checkpoints.size(); ++c) {
    REQUIRE(std::getline(in, line));
    char policy[64];
    int seed;
    long t;
    double inst, cum, avg;
    REQUIRE(std::sscanf(line.c_str(), "%63[^,],%d,%ld,%lf,%lf,%lf", policy, &seed, &t,
                        &inst, &cum, &avg) == 6);
    CHECK(policy == e0.policy);
    CHECK(seed == e0.seed);
    CHECK(t == result.checkpoints[c]);
    CHECK(cum == doctest::Approx(e0.cum[c]).epsilon(1e-9));
  }
}

TEST_CASE("manifest round trip") {
  BatchConfig cfg = small_batch();
  cfg.fixed_means = std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  std::string path = "test_manifest.json";
  write_manifest(cfg, ".", path);
  BatchConfig back = load_manifest(path);
  CHECK(back.scenario == cfg.scenario);
  CHECK(back.policies == cfg.policies);
  CHECK(back.horizon == cfg.horizon);
  CHECK(back.num_arms == cfg.num_arms);
  CHECK(back.graph_spec == cfg.graph_spec);
  CHECK(back.strategy_spec == cfg.strategy_spec);
  CHECK(back.dist == cfg.dist);
  CHECK(back.fixed_means == cfg.fixed_means);
  CHECK(back.master_seed == cfg.master_seed);
  CHECK(back.num_seeds == cfg.num_seeds);
  CHECK(back.num_checkpoints == cfg.num_checkpoints);
  // loading and re-running resolves to the identical output
  CHECK(csv_string(run_batch(back)) == csv_string(run_batch(cfg)));
  std::remove(path.c_str());
}

TEST_CASE("plot script emission") {
  BatchConfig cfg = small_batch();
  auto result = run_batch(cfg);
  std::string path = "test_plot.gp";
  emit_plot_script(result, path, 1234.5);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(content.find("$data_dfl_sso") != std::string::npos);
  CHECK(content.find("theorem bound") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("graph and strategy spec parsing") {
  CHECK(resolve_graph("complete", 5, 0).num_edges() == 10);
  CHECK(resolve_graph("path", 5, 0).num_edges() == 4);
  CHECK(resolve_graph("er:1.0", 5, 0).num_edges() == 10);
  CHECK_THROWS_AS(resolve_graph("banana", 5, 0), std::invalid_argument);

  RelationGraph g = make_path(4);
  CHECK(!resolve_strategies("", g).has_value());
  CHECK(resolve_strategies("indep:2", g)->size() == 7);
  CHECK(resolve_strategies("exact:1", g)->size() == 4);
  CHECK_THROWS_AS(resolve_strategies("bad", g), std::invalid_argument);
}
