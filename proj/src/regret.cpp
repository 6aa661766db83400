#include "netbandit/regret.hpp"

#include <cmath>
#include <stdexcept>

namespace netbandit {

void record_step(RegretTrace& trace, const ScenarioOptimum& opt, int action_index,
                 double realized_reward) {
  if (opt.scenario != trace.scenario)
    throw std::logic_error("trace and optimum disagree on scenario");
  if (action_index < 0 || action_index >= static_cast<int>(opt.gaps.size()))
    throw std::logic_error("action index outside the optimum's action universe");
  double inst_real = opt.optimal_value - realized_reward;
  double inst_pseudo = opt.gaps[action_index];
  double prev_real = trace.cum_realized.empty() ? 0.0 : trace.cum_realized.back();
  double prev_pseudo = trace.cum_pseudo.empty() ? 0.0 : trace.cum_pseudo.back();
  trace.instant_realized.push_back(inst_real);
  trace.instant_pseudo.push_back(inst_pseudo);
  trace.cum_realized.push_back(prev_real + inst_real);
  trace.cum_pseudo.push_back(prev_pseudo + inst_pseudo);
  trace.actions.push_back(action_index);
}

double bound_sso(long n, int num_arms, std::size_t clique_count) {
  if (n < 1 || num_arms < 1) throw std::invalid_argument("bound_sso: n, K must be >= 1");
  double nd = static_cast<double>(n), kd = static_cast<double>(num_arms);
  return 15.94 * std::sqrt(nd * kd) +
         0.74 * static_cast<double>(clique_count) * std::sqrt(nd / kd);
}

double bound_cso(long n, std::size_t f_size, std::size_t clique_count) {
  if (n < 1 || f_size < 1) throw std::invalid_argument("bound_cso: n, |F| must be >= 1");
  double nd = static_cast<double>(n), fd = static_cast<double>(f_size);
  return 15.94 * std::sqrt(nd * fd) +
         0.74 * static_cast<double>(clique_count) * std::sqrt(nd / fd);
}

double bound_ssr(long n, int num_arms) {
  if (n < 1 || num_arms < 1) throw std::invalid_argument("bound_ssr: n, K must be >= 1");
  double nd = static_cast<double>(n), kd = static_cast<double>(num_arms);
  return 49.0 * kd * std::sqrt(nd * kd);
}

double bound_csr(long n, int num_arms, int max_y_size) {
  if (n < 1 || num_arms < 1) throw std::invalid_argument("bound_csr: n, K must be >= 1");
  if (max_y_size < 1 || max_y_size > num_arms)
    throw std::invalid_argument("bound_csr: N must satisfy 1 <= N <= K");
  const double e = std::exp(1.0);
  double nd = static_cast<double>(n);
  double K = static_cast<double>(num_arms);
  double N = static_cast<double>(max_y_size);
  double term0 = N * K;
  double term1 = (std::sqrt(e * K) + 8.0 * (1.0 + N) * N * N * N) * std::pow(nd, 2.0 / 3.0);
  double term2 = (1.0 + 4.0 * std::sqrt(K) * N * N / e) * N * N * K * std::pow(nd, 5.0 / 6.0);
  return term0 + term1 + term2;
}

std::size_t clique_count_for_bound(const RelationGraph& g, const std::vector<double>& gaps,
                                   long n, double alpha) {
  if (static_cast<int>(gaps.size()) != g.num_arms())
    throw std::invalid_argument("gap vector length must equal arm count");
  double delta0 = alpha * std::sqrt(static_cast<double>(g.num_arms()) /
                                    static_cast<double>(n));
  std::vector<int> keep;
  for (int i = 0; i < g.num_arms(); ++i)
    if (gaps[i] > delta0) keep.push_back(i);
  if (keep.empty()) return 0;
  auto h = induced_subgraph(g, keep);
  return greedy_clique_cover(h.graph).size();
}

}  // namespace netbandit
