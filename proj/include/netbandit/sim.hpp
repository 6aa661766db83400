#ifndef NETBANDIT_SIM_HPP
#define NETBANDIT_SIM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "netbandit/env.hpp"
#include "netbandit/graph.hpp"
#include "netbandit/policies.hpp"
#include "netbandit/regret.hpp"
#include "netbandit/strategies.hpp"

namespace netbandit {

// Seed derivation: one master seed expands through a keyed counter scheme so
// that adding a policy or a seed never perturbs existing streams.
//   means_seed(s)       = derive(master, 1, s, 0)
//   env_seed(s)         = derive(master, 2, s, 0)
//   graph_seed(s)       = derive(master, 3, s, 0)
//   tie_seed(s, policy) = derive(master, 4, s, fnv1a(policy name))
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t a,
                          std::uint64_t b);
std::uint64_t derive_means_seed(std::uint64_t master, int seed_index);
std::uint64_t derive_env_seed(std::uint64_t master, int seed_index);
std::uint64_t derive_graph_seed(std::uint64_t master, int seed_index);
std::uint64_t derive_tie_seed(std::uint64_t master, int seed_index,
                              const std::string& policy_name);

/// Graph spec mini-language: er:<p> | complete | path | file:<path>.
RelationGraph resolve_graph(const std::string& spec, int num_arms, std::uint64_t seed);

/// Strategy spec mini-language: indep:<M> | all:<M> | exact:<M> | file:<path>.
/// Empty spec means single play (no strategy set).
std::optional<StrategySet> resolve_strategies(const std::string& spec,
                                              const RelationGraph& g);

/// Called after each round's update; used by accounting tests and tracing.
using StepObserver = std::function<void(long t, const Action&, const Policy&)>;

/// Core per-round loop: select, draw the full reward vector, mask visibility
/// per the scenario, update, record regret. Deterministic given env and rng.
RegretTrace run_loop(Scenario scenario, const BanditEnv& env, const RelationGraph& g,
                     const StrategySet* fs, const StrategyGraph* sg,
                     const ScenarioOptimum& opt, Policy& policy, long horizon,
                     Rng& tie_rng, const StepObserver* observer = nullptr);

/// Fully resolved single-episode configuration.
struct EpisodeSpec {
  Scenario scenario = Scenario::SSO;
  std::string policy_name = "dfl-sso";
  long horizon = 1;
  int num_arms = 1;
  std::string graph_spec = "er:0.3";
  std::uint64_t graph_seed = 0;
  std::string strategy_spec;  // empty for single play
  DistKind dist = DistKind::Bernoulli;
  std::vector<double> means;
  std::uint64_t env_seed = 0;
  std::uint64_t tie_seed = 0;
  PolicyOptions policy_options;
};

RegretTrace run_episode(const EpisodeSpec& spec,
                        const StepObserver* observer = nullptr);

/// Batch template; per-seed episodes are derived from the master seed.
struct BatchConfig {
  Scenario scenario = Scenario::SSO;
  std::vector<std::string> policies;
  long horizon = 10000;
  int num_arms = 100;
  std::string graph_spec = "er:0.3";
  std::string strategy_spec;
  DistKind dist = DistKind::Bernoulli;
  std::optional<std::vector<double>> fixed_means;  // else i.i.d. U[0,1] per seed
  std::uint64_t master_seed = 1;
  int num_seeds = 20;
  int num_checkpoints = 200;
  int threads = 0;  // 0 = hardware concurrency, capped by NETBANDIT_THREADS
  PolicyOptions policy_options;
};

struct EpisodeSummary {
  std::string policy;
  int seed = 0;
  double final_cum_pseudo = 0.0;
  double final_avg_pseudo = 0.0;
  // values at the shared checkpoints (pseudo-regret)
  std::vector<double> instant;
  std::vector<double> cum;
  std::vector<double> avg;
  std::vector<double> cum_realized;
};

struct PolicyAggregate {
  std::string policy;
  std::vector<double> mean_cum, std_cum, mean_avg, std_avg;
};

struct BatchResult {
  BatchConfig config;
  std::vector<long> checkpoints;
  std::vector<EpisodeSummary> episodes;   // ordered policy-major, seed-minor
  std::vector<PolicyAggregate> aggregates;
};

/// Paired design: every policy sees the identical environment per seed.
BatchResult run_batch(const BatchConfig& cfg);

/// Log-spaced checkpoint rounds in [1, n], deduplicated, always ending at n.
std::vector<long> make_checkpoints(long horizon, int count);

/// Worker-pool width after applying cfg.threads and NETBANDIT_THREADS.
int effective_threads(int requested, int num_jobs);

}  // namespace netbandit

#endif  // NETBANDIT_SIM_HPP
