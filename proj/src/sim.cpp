#include "netbandit/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

namespace netbandit {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t a,
                          std::uint64_t b) {
  return mix64(master + mix64(tag + mix64(a + mix64(b))));
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::uint64_t derive_means_seed(std::uint64_t master, int s) {
  return derive_seed(master, 1, static_cast<std::uint64_t>(s), 0);
}
std::uint64_t derive_env_seed(std::uint64_t master, int s) {
  return derive_seed(master, 2, static_cast<std::uint64_t>(s), 0);
}
std::uint64_t derive_graph_seed(std::uint64_t master, int s) {
  return derive_seed(master, 3, static_cast<std::uint64_t>(s), 0);
}
std::uint64_t derive_tie_seed(std::uint64_t master, int s, const std::string& policy) {
  return derive_seed(master, 4, static_cast<std::uint64_t>(s), fnv1a(policy));
}

RelationGraph resolve_graph(const std::string& spec, int num_arms, std::uint64_t seed) {
  if (spec == "complete") return make_complete(num_arms);
  if (spec == "path") return make_path(num_arms);
  if (spec.rfind("er:", 0) == 0) {
    double p = std::stod(spec.substr(3));
    return generate_er(num_arms, p, seed);
  }
  if (spec.rfind("file:", 0) == 0) return read_edge_list_file(spec.substr(5));
  throw std::invalid_argument("unknown graph spec: " + spec +
                              " (expected er:<p>|complete|path|file:<path>)");
}

std::optional<StrategySet> resolve_strategies(const std::string& spec,
                                              const RelationGraph& g) {
  if (spec.empty()) return std::nullopt;
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("strategy spec needs <kind>:<arg>, got: " + spec);
  std::string kind = spec.substr(0, colon);
  std::string arg = spec.substr(colon + 1);
  if (kind == "file") {
    StrategySet fs = read_strategy_list_file(g, arg, g.num_arms());
    // M is the largest listed strategy
    int m = 1;
    for (const auto& s : fs.strategies) m = std::max(m, static_cast<int>(s.size()));
    return make_strategy_set(g, fs.strategies, m);
  }
  int m = std::stoi(arg);
  return enumerate_feasible(g, constraint_from_name(kind), m);
}

RegretTrace run_loop(Scenario scenario, const BanditEnv& env, const RelationGraph& g,
                     const StrategySet* fs, const StrategyGraph* sg,
                     const ScenarioOptimum& opt, Policy& policy, long horizon,
                     Rng& tie_rng, const StepObserver* observer) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (scenario_is_combinatorial(scenario) && !fs)
    throw std::invalid_argument("combinatorial scenario needs a strategy set");
  if (scenario == Scenario::CSO && !sg)
    throw std::invalid_argument("CSO needs a strategy relation graph");

  RegretTrace trace;
  trace.scenario = scenario;
  trace.horizon = horizon;

  for (long t = 1; t <= horizon; ++t) {
    Action a;
    try {
      a = policy.select(t, tie_rng);
      std::vector<double> x = env.sample_round(t);

      Observation obs;
      obs.t = t;
      obs.action = a;
      switch (scenario) {
        case Scenario::SSO:
          obs.visible = g.closed_neighborhood(a.index);
          obs.realized = x[a.index];
          break;
        case Scenario::SSR:
          obs.visible = g.closed_neighborhood(a.index);
          obs.realized = 0.0;
          for (int j : obs.visible) obs.realized += x[j];
          break;
        case Scenario::CSR:
          obs.visible = fs->y_sets[a.index];
          obs.realized = 0.0;
          for (int i : obs.visible) obs.realized += x[i];
          break;
        case Scenario::CSO: {
          std::set<int> vis;
          for (int y : sg->closed_neighborhood(a.index))
            vis.insert(fs->strategies[y].begin(), fs->strategies[y].end());
          obs.visible.assign(vis.begin(), vis.end());
          obs.realized = 0.0;
          for (int i : fs->strategies[a.index]) obs.realized += x[i];
          break;
        }
      }
      obs.values.resize(obs.visible.size());
      for (std::size_t k = 0; k < obs.visible.size(); ++k)
        obs.values[k] = x[obs.visible[k]];

      policy.update(obs);
      record_step(trace, opt, a.index, obs.realized);
      if (observer) (*observer)(t, a, policy);
    } catch (const std::logic_error& e) {
      throw std::logic_error("round " + std::to_string(t) + ": " + e.what());
    }
  }
  return trace;
}

RegretTrace run_episode(const EpisodeSpec& spec, const StepObserver* observer) {
  RelationGraph g = resolve_graph(spec.graph_spec, spec.num_arms, spec.graph_seed);
  std::optional<StrategySet> fs = resolve_strategies(spec.strategy_spec, g);
  std::optional<StrategyGraph> sg;
  if (fs && spec.scenario == Scenario::CSO) sg = build_strategy_graph(*fs, g);

  BanditEnv env(spec.means, spec.dist, spec.env_seed);
  ScenarioOptimum opt =
      compute_optimum(env, g, fs ? &*fs : nullptr, spec.scenario);
  auto policy = make_policy(spec.policy_name, spec.scenario, g, fs ? &*fs : nullptr,
                            sg ? &*sg : nullptr, spec.horizon, spec.policy_options);
  Rng tie_rng(spec.tie_seed);
  return run_loop(spec.scenario, env, g, fs ? &*fs : nullptr, sg ? &*sg : nullptr, opt,
                  *policy, spec.horizon, tie_rng, observer);
}

std::vector<long> make_checkpoints(long horizon, int count) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (count < 1) throw std::invalid_argument("checkpoint count must be >= 1");
  std::set<long> pts;
  pts.insert(1);
  pts.insert(horizon);
  double ln = std::log(static_cast<double>(horizon));
  for (int k = 0; k < count; ++k) {
    double f = (count == 1) ? 1.0 : static_cast<double>(k) / (count - 1);
    long t = static_cast<long>(std::llround(std::exp(ln * f)));
    t = std::clamp(t, 1L, horizon);
    pts.insert(t);
  }
  return {pts.begin(), pts.end()};
}

int effective_threads(int requested, int num_jobs) {
  int n = requested > 0 ? requested
                        : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* cap = std::getenv("NETBANDIT_THREADS")) {
    int c = std::atoi(cap);
    if (c >= 1) n = std::min(n, c);
  }
  return std::max(1, std::min(n, num_jobs));
}

BatchResult run_batch(const BatchConfig& cfg) {
  if (cfg.policies.empty()) throw std::invalid_argument("batch needs at least one policy");
  if (cfg.num_seeds < 1) throw std::invalid_argument("batch needs at least one seed");

  BatchResult result;
  result.config = cfg;
  result.checkpoints = make_checkpoints(cfg.horizon, cfg.num_checkpoints);

  struct Job {
    std::string policy;
    int seed;
  };
  std::vector<Job> jobs;
  for (const auto& p : cfg.policies)
    for (int s = 0; s < cfg.num_seeds; ++s) jobs.push_back({p, s});

  result.episodes.resize(jobs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      std::size_t j = next.fetch_add(1);
      if (j >= jobs.size()) return;
      const Job& job = jobs[j];
      EpisodeSpec spec;
      spec.scenario = cfg.scenario;
      spec.policy_name = job.policy;
      spec.horizon = cfg.horizon;
      spec.num_arms = cfg.num_arms;
      spec.graph_spec = cfg.graph_spec;
      spec.graph_seed = derive_graph_seed(cfg.master_seed, job.seed);
      spec.strategy_spec = cfg.strategy_spec;
      spec.dist = cfg.dist;
      spec.means = cfg.fixed_means
                       ? *cfg.fixed_means
                       : draw_uniform_means(cfg.num_arms,
                                            derive_means_seed(cfg.master_seed, job.seed));
      spec.env_seed = derive_env_seed(cfg.master_seed, job.seed);
      spec.tie_seed = derive_tie_seed(cfg.master_seed, job.seed, job.policy);
      spec.policy_options = cfg.policy_options;

      RegretTrace trace = run_episode(spec);

      EpisodeSummary sum;
      sum.policy = job.policy;
      sum.seed = job.seed;
      sum.final_cum_pseudo = trace.cum_pseudo.back();
      sum.final_avg_pseudo = sum.final_cum_pseudo / static_cast<double>(cfg.horizon);
      for (long t : result.checkpoints) {
        std::size_t i = static_cast<std::size_t>(t - 1);
        sum.instant.push_back(trace.instant_pseudo[i]);
        sum.cum.push_back(trace.cum_pseudo[i]);
        sum.avg.push_back(trace.cum_pseudo[i] / static_cast<double>(t));
        sum.cum_realized.push_back(trace.cum_realized[i]);
      }
      result.episodes[j] = std::move(sum);
    }
  };

  int nthreads = effective_threads(cfg.threads, static_cast<int>(jobs.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Aggregate per policy over seeds at every checkpoint.
  const std::size_t nc = result.checkpoints.size();
  for (const auto& p : cfg.policies) {
    PolicyAggregate agg;
    agg.policy = p;
    agg.mean_cum.assign(nc, 0.0);
    agg.std_cum.assign(nc, 0.0);
    agg.mean_avg.assign(nc, 0.0);
    agg.std_avg.assign(nc, 0.0);
    std::vector<const EpisodeSummary*> eps;
    for (const auto& e : result.episodes)
      if (e.policy == p) eps.push_back(&e);
    const double ns = static_cast<double>(eps.size());
    for (std::size_t c = 0; c < nc; ++c) {
      double mc = 0.0, ma = 0.0;
      for (auto* e : eps) {
        mc += e->cum[c];
        ma += e->avg[c];
      }
      mc /= ns;
      ma /= ns;
      double vc = 0.0, va = 0.0;
      for (auto* e : eps) {
        vc += (e->cum[c] - mc) * (e->cum[c] - mc);
        va += (e->avg[c] - ma) * (e->avg[c] - ma);
      }
      double denom = eps.size() > 1 ? ns - 1.0 : 1.0;
      agg.mean_cum[c] = mc;
      agg.std_cum[c] = std::sqrt(vc / denom);
      agg.mean_avg[c] = ma;
      agg.std_avg[c] = std::sqrt(va / denom);
    }
    result.aggregates.push_back(std::move(agg));
  }
  return result;
}

}  // namespace netbandit
