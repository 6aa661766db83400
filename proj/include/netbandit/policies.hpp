#ifndef NETBANDIT_POLICIES_HPP
#define NETBANDIT_POLICIES_HPP

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "netbandit/env.hpp"
#include "netbandit/graph.hpp"
#include "netbandit/rng.hpp"
#include "netbandit/strategies.hpp"

namespace netbandit {

inline constexpr double kInfIndex = std::numeric_limits<double>::infinity();

/// max(ln y, 0); the clamp the proofs use throughout.
double log_plus(double y);

// --- Pure index functions -------------------------------------------------
// Rounds are 1-indexed. A zero count yields the +inf cold-start sentinel.

/// Anytime MOSS-shape index: xbar + sqrt(log+(t/(K*O)) / O).
double sso_index(double xbar, long obs_count, long t, int num_arms);

/// CSO index on normalized strategy means; the count constant is |F|
/// (literal-K variant available via the constant argument).
double cso_index(double rbar_norm, long obs_count, long t, int count_constant);

/// SSR index on the K-normalized side-reward mean with counter O^b.
double ssr_index(double bbar_norm, long side_count, long t, int num_arms);

/// Per-arm CSR score: xbar + sqrt(max(ln(t^{2/3}/(K*O)), 0) / O).
double csr_arm_score(double xbar, long obs_count, long t, int num_arms);

/// Horizon-aware MOSS baseline index.
double moss_index(double xbar, long pull_count, long horizon, int num_actions);

double ucb1_index(double xbar, long pull_count, long t);

// --- Select/update interface ----------------------------------------------

struct Action {
  Scenario scenario;
  int index = -1;  // arm (single play) or strategy (combinatorial play)
};

struct Observation {
  long t = 0;
  Action action;
  std::vector<int> visible;    // observed arms, sorted ascending
  std::vector<double> values;  // X_{j,t} parallel to visible
  double realized = 0.0;       // realized scenario reward of the action
};

class Policy {
 public:
  virtual ~Policy() = default;
  virtual Action select(long t, Rng& rng) = 0;
  virtual void update(const Observation& obs) = 0;
  virtual std::string name() const = 0;
};

/// Algorithm: single play with side observation (DFL-SSO).
class DflSsoPolicy : public Policy {
 public:
  explicit DflSsoPolicy(const RelationGraph& g);
  Action select(long t, Rng& rng) override;
  void update(const Observation& obs) override;
  std::string name() const override { return "dfl-sso"; }

  const std::vector<long>& obs_counts() const { return obs_count_; }
  const std::vector<double>& means() const { return xbar_; }
  const std::vector<long>& pull_counts() const { return pull_count_; }

 private:
  const RelationGraph& g_;
  std::vector<long> obs_count_;   // O_i
  std::vector<double> xbar_;      // X̄_i
  std::vector<long> pull_count_;  // T_i
};

/// Algorithm: combinatorial play with side observation (DFL-CSO), run as
/// single play over the strategy relation graph.
class DflCsoPolicy : public Policy {
 public:
  DflCsoPolicy(const StrategySet& fs, const StrategyGraph& sg,
               bool literal_k_constant = false);
  Action select(long t, Rng& rng) override;
  void update(const Observation& obs) override;
  std::string name() const override { return "dfl-cso"; }

  const std::vector<long>& obs_counts() const { return obs_count_; }
  const std::vector<double>& normalized_means() const { return rbar_norm_; }

 private:
  const StrategySet& fs_;
  const StrategyGraph& sg_;
  int count_constant_;
  std::vector<long> obs_count_;    // O_x over strategies
  std::vector<double> rbar_norm_;  // R̄_x / M
  std::vector<long> pull_count_;
};

/// Algorithm: single play with side reward (DFL-SSR). Side-reward statistics
/// are derived each round: B̄_i = sum of X̄_j over N_i, O^b_i = min O_j over N_i.
class DflSsrPolicy : public Policy {
 public:
  explicit DflSsrPolicy(const RelationGraph& g, bool normalize = true);
  Action select(long t, Rng& rng) override;
  void update(const Observation& obs) override;
  std::string name() const override { return "dfl-ssr"; }

  const std::vector<long>& obs_counts() const { return obs_count_; }
  const std::vector<double>& means() const { return xbar_; }
  long side_count(int arm) const;     // O^b_i
  double side_reward_mean(int arm) const;  // B̄_i (unnormalized)

 private:
  const RelationGraph& g_;
  bool normalize_;
  std::vector<long> obs_count_;
  std::vector<double> xbar_;
  std::vector<long> pull_count_;
};

/// Algorithm: combinatorial play with side reward (DFL-CSR); per-arm scores,
/// exhaustive oracle over F.
class DflCsrPolicy : public Policy {
 public:
  DflCsrPolicy(const StrategySet& fs);
  Action select(long t, Rng& rng) override;
  void update(const Observation& obs) override;
  std::string name() const override { return "dfl-csr"; }

  const std::vector<long>& obs_counts() const { return obs_count_; }
  const std::vector<double>& means() const { return xbar_; }

 private:
  const StrategySet& fs_;
  std::vector<long> obs_count_;
  std::vector<double> xbar_;
};

/// MOSS / UCB1 / uniform-random baselines over the scenario's action universe
/// (arms for single play, strategies for combinatorial play). They learn only
/// from the played action's realized reward, normalized by the reward scale.
class BaselinePolicy : public Policy {
 public:
  enum class Kind { Moss, Ucb1, Random };

  BaselinePolicy(Kind kind, Scenario scenario, int num_actions, long horizon,
                 double reward_scale);
  Action select(long t, Rng& rng) override;
  void update(const Observation& obs) override;
  std::string name() const override;

  const std::vector<long>& pull_counts() const { return pull_count_; }

 private:
  Kind kind_;
  Scenario scenario_;
  long horizon_;
  double scale_;
  std::vector<double> xbar_;
  std::vector<long> pull_count_;
};

struct PolicyOptions {
  bool cso_literal_k = false;   // use K instead of |F| as the CSO count constant
  bool ssr_normalize = true;    // divide B̄ by K inside the index
};

/// Factory keyed by the CLI policy names: dfl-sso, dfl-cso, dfl-ssr, dfl-csr,
/// moss, ucb1, random. Throws std::invalid_argument on a name/scenario
/// mismatch (e.g. dfl-cso under SSO).
std::unique_ptr<Policy> make_policy(const std::string& name, Scenario scenario,
                                    const RelationGraph& g, const StrategySet* fs,
                                    const StrategyGraph* sg, long horizon,
                                    const PolicyOptions& opts = {});

}  // namespace netbandit

#endif  // NETBANDIT_POLICIES_HPP
