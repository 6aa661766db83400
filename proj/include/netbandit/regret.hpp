#ifndef NETBANDIT_REGRET_HPP
#define NETBANDIT_REGRET_HPP

#include <vector>

#include "netbandit/env.hpp"
#include "netbandit/graph.hpp"

namespace netbandit {

/// Per-episode regret accounting. Realized regret follows the scenario's
/// definition (optimal expected value minus realized reward); pseudo-regret
/// accumulates the gap of the chosen action.
struct RegretTrace {
  Scenario scenario = Scenario::SSO;
  long horizon = 0;
  std::vector<double> instant_realized;
  std::vector<double> instant_pseudo;
  std::vector<double> cum_realized;
  std::vector<double> cum_pseudo;
  std::vector<int> actions;

  long rounds() const { return static_cast<long>(instant_pseudo.size()); }
};

void record_step(RegretTrace& trace, const ScenarioOptimum& opt, int action_index,
                 double realized_reward);

// Closed-form regret-bound calculators.

/// 15.94*sqrt(n*K) + 0.74*|C|*sqrt(n/K).
double bound_sso(long n, int num_arms, std::size_t clique_count);

/// Same shape over strategies: 15.94*sqrt(n*|F|) + 0.74*|C|*sqrt(n/|F|).
double bound_cso(long n, std::size_t f_size, std::size_t clique_count);

/// 49*K*sqrt(n*K).
double bound_ssr(long n, int num_arms);

/// N*K + (sqrt(e*K) + 8*(1+N)*N^3)*n^(2/3) + (1 + 4*sqrt(K)*N^2/e)*N^2*K*n^(5/6).
double bound_csr(long n, int num_arms, int max_y_size);

/// Analysis-time helper: |C| of the greedy clique cover of the subgraph H
/// induced on arms with gap above delta_0 = alpha*sqrt(K/n). Uses ground-truth
/// gaps. alpha defaults to e as in the analysis.
std::size_t clique_count_for_bound(const RelationGraph& g, const std::vector<double>& gaps,
                                   long n, double alpha = 2.718281828459045235);

}  // namespace netbandit

#endif  // NETBANDIT_REGRET_HPP
