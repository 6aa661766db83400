#ifndef NETBANDIT_STRATEGIES_HPP
#define NETBANDIT_STRATEGIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "netbandit/graph.hpp"
#include "netbandit/rng.hpp"

namespace netbandit {

enum class StrategyConstraint {
  AllSubsets,       // all nonempty subsets of size <= M
  ExactSize,        // subsets of size exactly M
  IndependentSets,  // independent sets in g of size <= M
  ExplicitList,
};

StrategyConstraint constraint_from_name(const std::string& name);

/// Feasible strategy set F. Strategies and Y-sets are sorted arm-index lists;
/// strategies are ordered by cardinality, then lexicographically.
struct StrategySet {
  std::vector<std::vector<int>> strategies;  // component arms s_x
  std::vector<std::vector<int>> y_sets;      // Y_x = union of N_i over s_x
  int max_cardinality = 1;                   // M
  int max_y_size = 0;                        // N = max_x |Y_x|
  int num_arms = 0;

  std::size_t size() const { return strategies.size(); }
};

inline constexpr std::size_t kDefaultStrategyCap = 1'000'000;

StrategySet enumerate_feasible(const RelationGraph& g, StrategyConstraint constraint,
                               int max_cardinality,
                               std::size_t cap = kDefaultStrategyCap);

StrategySet make_strategy_set(const RelationGraph& g,
                              std::vector<std::vector<int>> strategies,
                              int max_cardinality);

/// One strategy per line, space-separated 0-based arm indices.
StrategySet read_strategy_list_file(const RelationGraph& g, const std::string& path,
                                    int max_cardinality);

enum class StrategyEdgeRule {
  Mutual,  // edge iff s_y ⊆ Y_x and s_x ⊆ Y_y (default, per worked example)
  Either,  // edge iff s_y ⊆ Y_x or s_x ⊆ Y_y (one-directional reading)
};

/// Strategy relation graph SG(F, L): vertices are strategies, edges follow
/// the containment rule. Converts CSO into single play over com-arms.
struct StrategyGraph {
  const StrategySet* base = nullptr;
  RelationGraph graph;  // over strategy indices

  const std::vector<int>& closed_neighborhood(int x) const {
    return graph.closed_neighborhood(x);
  }
};

StrategyGraph build_strategy_graph(const StrategySet& fs, const RelationGraph& g,
                                   StrategyEdgeRule rule = StrategyEdgeRule::Mutual);

enum class ScoreMode { SumOverComponents, SumOverY };

/// Exhaustive combinatorial argmax: maximizes the per-arm score summed over
/// s_x (SumOverComponents) or Y_x (SumOverY). Ties are broken uniformly with
/// the episode RNG; +inf scores are dominant sentinels.
int argmax_strategy(const StrategySet& fs, const std::vector<double>& per_arm_scores,
                    ScoreMode mode, Rng& rng);

}  // namespace netbandit

#endif  // NETBANDIT_STRATEGIES_HPP
