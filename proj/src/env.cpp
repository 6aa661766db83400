#include "netbandit/env.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "netbandit/strategies.hpp"

namespace netbandit {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

double keyed_uniform(std::uint64_t seed, long t, int arm) {
  std::uint64_t h = mix64(seed + mix64(static_cast<std::uint64_t>(t) +
                                       mix64(static_cast<std::uint64_t>(arm))));
  return (h >> 11) * 0x1.0p-53;
}

}  // namespace

Scenario scenario_from_name(const std::string& name) {
  if (name == "sso") return Scenario::SSO;
  if (name == "cso") return Scenario::CSO;
  if (name == "ssr") return Scenario::SSR;
  if (name == "csr") return Scenario::CSR;
  throw std::invalid_argument("unknown scenario: " + name);
}

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::SSO: return "sso";
    case Scenario::CSO: return "cso";
    case Scenario::SSR: return "ssr";
    case Scenario::CSR: return "csr";
  }
  return "?";
}

bool scenario_is_combinatorial(Scenario s) {
  return s == Scenario::CSO || s == Scenario::CSR;
}

DistKind dist_from_name(const std::string& name) {
  if (name == "bernoulli") return DistKind::Bernoulli;
  if (name == "uniform") return DistKind::UniformInterval;
  if (name == "point-mass") return DistKind::PointMass;
  throw std::invalid_argument("unknown distribution: " + name);
}

std::string dist_name(DistKind d) {
  switch (d) {
    case DistKind::Bernoulli: return "bernoulli";
    case DistKind::UniformInterval: return "uniform";
    case DistKind::PointMass: return "point-mass";
  }
  return "?";
}

BanditEnv::BanditEnv(std::vector<double> means, DistKind dist, std::uint64_t seed)
    : means_(std::move(means)), dist_(dist), seed_(seed) {
  if (means_.empty()) throw std::invalid_argument("environment needs at least one arm");
  for (double m : means_)
    if (!(m >= 0.0 && m <= 1.0))
      throw std::invalid_argument("arm mean outside [0,1]");
}

double BanditEnv::sample(int arm, long t) const {
  if (arm < 0 || arm >= num_arms())
    throw std::invalid_argument("arm out of range");
  double mu = means_[arm];
  switch (dist_) {
    case DistKind::PointMass:
      return mu;
    case DistKind::Bernoulli:
      return keyed_uniform(seed_, t, arm) < mu ? 1.0 : 0.0;
    case DistKind::UniformInterval: {
      // uniform on [mu - w, mu + w] with the widest w keeping support in [0,1]
      double w = std::min(mu, 1.0 - mu);
      return mu + (2.0 * keyed_uniform(seed_, t, arm) - 1.0) * w;
    }
  }
  return mu;
}

std::vector<double> BanditEnv::sample_round(long t) const {
  std::vector<double> x(num_arms());
  for (int i = 0; i < num_arms(); ++i) x[i] = sample(i, t);
  return x;
}

namespace {

ScenarioOptimum finish_optimum(Scenario scenario, std::vector<double> values) {
  ScenarioOptimum opt;
  opt.scenario = scenario;
  opt.values = std::move(values);
  auto it = std::max_element(opt.values.begin(), opt.values.end());
  opt.optimal_index = static_cast<int>(it - opt.values.begin());
  opt.optimal_value = *it;
  opt.gaps.resize(opt.values.size());
  for (std::size_t a = 0; a < opt.values.size(); ++a)
    opt.gaps[a] = opt.optimal_value - opt.values[a];
  double dmin = 0.0;
  bool found = false;
  for (double g : opt.gaps) {
    if (g > 0.0 && (!found || g < dmin)) {
      dmin = g;
      found = true;
    }
  }
  if (found) opt.delta_min = dmin;
  return opt;
}

}  // namespace

ScenarioOptimum compute_optimum(const BanditEnv& env, const RelationGraph& g,
                                const StrategySet* strategies, Scenario scenario) {
  const auto& mu = env.means();
  if (env.num_arms() != g.num_arms())
    throw std::invalid_argument("environment and graph disagree on arm count");
  switch (scenario) {
    case Scenario::SSO:
      return finish_optimum(scenario, mu);
    case Scenario::SSR: {
      std::vector<double> u(mu.size());
      for (int i = 0; i < g.num_arms(); ++i)
        for (int j : g.closed_neighborhood(i)) u[i] += mu[j];
      return finish_optimum(scenario, std::move(u));
    }
    case Scenario::CSO: {
      if (!strategies)
        throw std::invalid_argument("CSO optimum requires a strategy set");
      std::vector<double> lambda(strategies->strategies.size());
      for (std::size_t x = 0; x < strategies->strategies.size(); ++x)
        for (int i : strategies->strategies[x]) lambda[x] += mu[i];
      return finish_optimum(scenario, std::move(lambda));
    }
    case Scenario::CSR: {
      if (!strategies)
        throw std::invalid_argument("CSR optimum requires a strategy set");
      std::vector<double> sigma(strategies->strategies.size());
      for (std::size_t x = 0; x < strategies->strategies.size(); ++x)
        for (int i : strategies->y_sets[x]) sigma[x] += mu[i];
      return finish_optimum(scenario, std::move(sigma));
    }
  }
  throw std::logic_error("unreachable scenario");
}

std::vector<double> read_means_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open means file: " + path);
  std::vector<double> means;
  double v;
  while (in >> v) means.push_back(v);
  if (means.empty()) throw std::runtime_error("means file is empty: " + path);
  return means;
}

std::vector<double> draw_uniform_means(int num_arms, std::uint64_t means_seed) {
  std::vector<double> means(num_arms);
  for (int i = 0; i < num_arms; ++i)
    means[i] = (mix64(means_seed + mix64(static_cast<std::uint64_t>(i))) >> 11) * 0x1.0p-53;
  return means;
}

}  // namespace netbandit
