#include "netbandit/policies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netbandit {

double log_plus(double y) { return std::max(std::log(y), 0.0); }

double sso_index(double xbar, long obs_count, long t, int num_arms) {
  if (obs_count == 0) return kInfIndex;
  double o = static_cast<double>(obs_count);
  return xbar + std::sqrt(log_plus(static_cast<double>(t) / (num_arms * o)) / o);
}

double cso_index(double rbar_norm, long obs_count, long t, int count_constant) {
  if (obs_count == 0) return kInfIndex;
  double o = static_cast<double>(obs_count);
  return rbar_norm + std::sqrt(log_plus(static_cast<double>(t) / (count_constant * o)) / o);
}

double ssr_index(double bbar_norm, long side_count, long t, int num_arms) {
  if (side_count == 0) return kInfIndex;
  double o = static_cast<double>(side_count);
  return bbar_norm + std::sqrt(log_plus(static_cast<double>(t) / (num_arms * o)) / o);
}

double csr_arm_score(double xbar, long obs_count, long t, int num_arms) {
  if (obs_count == 0) return kInfIndex;
  double o = static_cast<double>(obs_count);
  double arg = std::pow(static_cast<double>(t), 2.0 / 3.0) / (num_arms * o);
  return xbar + std::sqrt(log_plus(arg) / o);
}

double moss_index(double xbar, long pull_count, long horizon, int num_actions) {
  if (pull_count == 0) return kInfIndex;
  double tc = static_cast<double>(pull_count);
  return xbar + std::sqrt(log_plus(static_cast<double>(horizon) / (num_actions * tc)) / tc);
}

double ucb1_index(double xbar, long pull_count, long t) {
  if (pull_count == 0) return kInfIndex;
  return xbar + std::sqrt(2.0 * std::log(static_cast<double>(t)) /
                          static_cast<double>(pull_count));
}

namespace {

void check_visible(const Observation& obs, const std::vector<int>& expected,
                   const char* what) {
  if (obs.visible != expected)
    throw std::logic_error(std::string("observation visible set does not match ") + what);
}

void running_mean_update(std::vector<long>& count, std::vector<double>& mean, int k,
                         double value) {
  count[k] += 1;
  mean[k] += (value - mean[k]) / static_cast<double>(count[k]);
}

}  // namespace

// --- DFL-SSO ----------------------------------------------------------------

DflSsoPolicy::DflSsoPolicy(const RelationGraph& g)
    : g_(g),
      obs_count_(g.num_arms(), 0),
      xbar_(g.num_arms(), 0.0),
      pull_count_(g.num_arms(), 0) {}

Action DflSsoPolicy::select(long t, Rng& rng) {
  std::vector<double> idx(xbar_.size());
  for (std::size_t i = 0; i < xbar_.size(); ++i)
    idx[i] = sso_index(xbar_[i], obs_count_[i], t, g_.num_arms());
  return {Scenario::SSO, argmax_tiebreak(idx, rng)};
}

void DflSsoPolicy::update(const Observation& obs) {
  check_visible(obs, g_.closed_neighborhood(obs.action.index), "N_i of the pulled arm");
  for (std::size_t k = 0; k < obs.visible.size(); ++k)
    running_mean_update(obs_count_, xbar_, obs.visible[k], obs.values[k]);
  pull_count_[obs.action.index] += 1;
}

// --- DFL-CSO ----------------------------------------------------------------

DflCsoPolicy::DflCsoPolicy(const StrategySet& fs, const StrategyGraph& sg,
                           bool literal_k_constant)
    : fs_(fs),
      sg_(sg),
      count_constant_(literal_k_constant ? fs.num_arms : static_cast<int>(fs.size())),
      obs_count_(fs.size(), 0),
      rbar_norm_(fs.size(), 0.0),
      pull_count_(fs.size(), 0) {}

Action DflCsoPolicy::select(long t, Rng& rng) {
  std::vector<double> idx(fs_.size());
  for (std::size_t x = 0; x < fs_.size(); ++x)
    idx[x] = cso_index(rbar_norm_[x], obs_count_[x], t, count_constant_);
  return {Scenario::CSO, argmax_tiebreak(idx, rng)};
}

void DflCsoPolicy::update(const Observation& obs) {
  std::vector<double> value(fs_.num_arms, 0.0);
  std::vector<char> seen(fs_.num_arms, 0);
  for (std::size_t k = 0; k < obs.visible.size(); ++k) {
    value[obs.visible[k]] = obs.values[k];
    seen[obs.visible[k]] = 1;
  }
  for (int y : sg_.closed_neighborhood(obs.action.index)) {
    double r = 0.0;
    for (int i : fs_.strategies[y]) {
      if (!seen[i])
        throw std::logic_error("cannot reconstruct neighbor strategy reward: arm " +
                               std::to_string(i) + " not observed");
      r += value[i];
    }
    running_mean_update(obs_count_, rbar_norm_, y, r / fs_.max_cardinality);
  }
  pull_count_[obs.action.index] += 1;
}

// --- DFL-SSR ----------------------------------------------------------------

DflSsrPolicy::DflSsrPolicy(const RelationGraph& g, bool normalize)
    : g_(g),
      normalize_(normalize),
      obs_count_(g.num_arms(), 0),
      xbar_(g.num_arms(), 0.0),
      pull_count_(g.num_arms(), 0) {}

long DflSsrPolicy::side_count(int arm) const {
  long m = obs_count_[g_.closed_neighborhood(arm).front()];
  for (int j : g_.closed_neighborhood(arm)) m = std::min(m, obs_count_[j]);
  return m;
}

double DflSsrPolicy::side_reward_mean(int arm) const {
  double b = 0.0;
  for (int j : g_.closed_neighborhood(arm)) b += xbar_[j];
  return b;
}

Action DflSsrPolicy::select(long t, Rng& rng) {
  const int K = g_.num_arms();
  std::vector<double> idx(xbar_.size());
  for (int i = 0; i < K; ++i) {
    double b = side_reward_mean(i);
    if (normalize_) b /= K;
    idx[i] = ssr_index(b, side_count(i), t, K);
  }
  return {Scenario::SSR, argmax_tiebreak(idx, rng)};
}

void DflSsrPolicy::update(const Observation& obs) {
  check_visible(obs, g_.closed_neighborhood(obs.action.index), "N_i of the pulled arm");
  for (std::size_t k = 0; k < obs.visible.size(); ++k)
    running_mean_update(obs_count_, xbar_, obs.visible[k], obs.values[k]);
  pull_count_[obs.action.index] += 1;
}

// --- DFL-CSR ----------------------------------------------------------------

DflCsrPolicy::DflCsrPolicy(const StrategySet& fs)
    : fs_(fs), obs_count_(fs.num_arms, 0), xbar_(fs.num_arms, 0.0) {}

Action DflCsrPolicy::select(long t, Rng& rng) {
  std::vector<double> scores(fs_.num_arms);
  for (int i = 0; i < fs_.num_arms; ++i)
    scores[i] = csr_arm_score(xbar_[i], obs_count_[i], t, fs_.num_arms);
  return {Scenario::CSR, argmax_strategy(fs_, scores, ScoreMode::SumOverY, rng)};
}

void DflCsrPolicy::update(const Observation& obs) {
  check_visible(obs, fs_.y_sets[obs.action.index], "Y_x of the played strategy");
  for (std::size_t k = 0; k < obs.visible.size(); ++k)
    running_mean_update(obs_count_, xbar_, obs.visible[k], obs.values[k]);
}

// --- Baselines ----------------------------------------------------------------

BaselinePolicy::BaselinePolicy(Kind kind, Scenario scenario, int num_actions,
                               long horizon, double reward_scale)
    : kind_(kind),
      scenario_(scenario),
      horizon_(horizon),
      scale_(reward_scale),
      xbar_(num_actions, 0.0),
      pull_count_(num_actions, 0) {
  if (num_actions < 1) throw std::invalid_argument("baseline needs at least one action");
  if (horizon < 1) throw std::invalid_argument("baseline horizon must be positive");
}

Action BaselinePolicy::select(long t, Rng& rng) {
  const int A = static_cast<int>(xbar_.size());
  if (kind_ == Kind::Random) return {scenario_, rng.below(A)};
  std::vector<double> idx(A);
  for (int a = 0; a < A; ++a)
    idx[a] = (kind_ == Kind::Moss) ? moss_index(xbar_[a], pull_count_[a], horizon_, A)
                                   : ucb1_index(xbar_[a], pull_count_[a], t);
  return {scenario_, argmax_tiebreak(idx, rng)};
}

void BaselinePolicy::update(const Observation& obs) {
  int a = obs.action.index;
  pull_count_[a] += 1;
  xbar_[a] += (obs.realized / scale_ - xbar_[a]) / static_cast<double>(pull_count_[a]);
}

std::string BaselinePolicy::name() const {
  switch (kind_) {
    case Kind::Moss: return "moss";
    case Kind::Ucb1: return "ucb1";
    case Kind::Random: return "random";
  }
  return "?";
}

// --- Factory ----------------------------------------------------------------

std::unique_ptr<Policy> make_policy(const std::string& name, Scenario scenario,
                                    const RelationGraph& g, const StrategySet* fs,
                                    const StrategyGraph* sg, long horizon,
                                    const PolicyOptions& opts) {
  auto need_combinatorial = [&]() {
    if (!fs) throw std::invalid_argument("policy " + name + " needs a strategy set");
  };
  if (name == "dfl-sso") {
    if (scenario != Scenario::SSO)
      throw std::invalid_argument("dfl-sso runs only under the SSO scenario");
    return std::make_unique<DflSsoPolicy>(g);
  }
  if (name == "dfl-cso") {
    if (scenario != Scenario::CSO)
      throw std::invalid_argument("dfl-cso runs only under the CSO scenario");
    need_combinatorial();
    if (!sg) throw std::invalid_argument("dfl-cso needs a strategy relation graph");
    return std::make_unique<DflCsoPolicy>(*fs, *sg, opts.cso_literal_k);
  }
  if (name == "dfl-ssr") {
    if (scenario != Scenario::SSR)
      throw std::invalid_argument("dfl-ssr runs only under the SSR scenario");
    return std::make_unique<DflSsrPolicy>(g, opts.ssr_normalize);
  }
  if (name == "dfl-csr") {
    if (scenario != Scenario::CSR)
      throw std::invalid_argument("dfl-csr runs only under the CSR scenario");
    need_combinatorial();
    return std::make_unique<DflCsrPolicy>(*fs);
  }

  // Baselines act on the scenario's action universe and learn from the played
  // action's realized reward only.
  int num_actions;
  double scale;
  switch (scenario) {
    case Scenario::SSO:
      num_actions = g.num_arms();
      scale = 1.0;
      break;
    case Scenario::SSR:
      num_actions = g.num_arms();
      scale = static_cast<double>(g.num_arms());
      break;
    case Scenario::CSO:
      need_combinatorial();
      num_actions = static_cast<int>(fs->size());
      scale = static_cast<double>(fs->max_cardinality);
      break;
    case Scenario::CSR:
      need_combinatorial();
      num_actions = static_cast<int>(fs->size());
      scale = static_cast<double>(fs->max_y_size);
      break;
    default:
      throw std::logic_error("unreachable scenario");
  }
  if (name == "moss")
    return std::make_unique<BaselinePolicy>(BaselinePolicy::Kind::Moss, scenario,
                                            num_actions, horizon, scale);
  if (name == "ucb1")
    return std::make_unique<BaselinePolicy>(BaselinePolicy::Kind::Ucb1, scenario,
                                            num_actions, horizon, scale);
  if (name == "random")
    return std::make_unique<BaselinePolicy>(BaselinePolicy::Kind::Random, scenario,
                                            num_actions, horizon, scale);
  throw std::invalid_argument("unknown policy: " + name);
}

}  // namespace netbandit
