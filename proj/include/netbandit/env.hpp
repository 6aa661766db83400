#ifndef NETBANDIT_ENV_HPP
#define NETBANDIT_ENV_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netbandit/graph.hpp"

namespace netbandit {

struct StrategySet;  // strategies.hpp

enum class Scenario { SSO, CSO, SSR, CSR };

Scenario scenario_from_name(const std::string& name);
std::string scenario_name(Scenario s);
bool scenario_is_combinatorial(Scenario s);

enum class DistKind { Bernoulli, UniformInterval, PointMass };

DistKind dist_from_name(const std::string& name);
std::string dist_name(DistKind d);

/// Stochastic environment: K arms with means in [0,1] and i.i.d. rewards
/// supported in [0,1]. Sampling is a pure function of (seed, t, arm), so any
/// round can be regenerated independently.
class BanditEnv {
 public:
  BanditEnv(std::vector<double> means, DistKind dist, std::uint64_t seed);

  int num_arms() const { return static_cast<int>(means_.size()); }
  const std::vector<double>& means() const { return means_; }
  DistKind dist_kind() const { return dist_; }
  std::uint64_t seed() const { return seed_; }

  /// Reward of a single arm at round t (t >= 1).
  double sample(int arm, long t) const;

  /// Full reward vector X_{.,t}; all observers of arm j at round t see the
  /// same value.
  std::vector<double> sample_round(long t) const;

 private:
  std::vector<double> means_;
  DistKind dist_;
  std::uint64_t seed_;
};

/// Ground-truth optimum and gaps under one of the four scenarios. Entries are
/// indexed by arm (SSO/SSR) or by strategy (CSO/CSR).
struct ScenarioOptimum {
  Scenario scenario;
  double optimal_value = 0.0;
  int optimal_index = -1;
  std::vector<double> values;  // per-action expected reward
  std::vector<double> gaps;    // optimal_value - values[a]
  std::optional<double> delta_min;  // smallest positive gap; empty if all zero
};

ScenarioOptimum compute_optimum(const BanditEnv& env, const RelationGraph& g,
                                const StrategySet* strategies, Scenario scenario);

std::vector<double> read_means_file(const std::string& path);

/// K i.i.d. U[0,1] means from a dedicated seed, independent of reward draws.
std::vector<double> draw_uniform_means(int num_arms, std::uint64_t means_seed);

// SplitMix64 finalizer; the keyed counter generator behind BanditEnv and the
// seed-derivation scheme in sim.
std::uint64_t mix64(std::uint64_t z);

}  // namespace netbandit

#endif  // NETBANDIT_ENV_HPP
