#include "netbandit/strategies.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace netbandit {

int argmax_tiebreak(const std::vector<double>& values, Rng& rng) {
  if (values.empty()) throw std::invalid_argument("argmax over empty value list");
  double best = values[0];
  for (double v : values) best = std::max(best, v);
  std::vector<int> ties;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == best) ties.push_back(static_cast<int>(i));
  return ties[rng.below(static_cast<int>(ties.size()))];
}

StrategyConstraint constraint_from_name(const std::string& name) {
  if (name == "all") return StrategyConstraint::AllSubsets;
  if (name == "exact") return StrategyConstraint::ExactSize;
  if (name == "indep") return StrategyConstraint::IndependentSets;
  if (name == "file") return StrategyConstraint::ExplicitList;
  throw std::invalid_argument("unknown strategy constraint: " + name);
}

namespace {

std::vector<int> union_of_neighborhoods(const RelationGraph& g,
                                        const std::vector<int>& arms) {
  std::set<int> y;
  for (int i : arms) {
    const auto& n = g.closed_neighborhood(i);
    y.insert(n.begin(), n.end());
  }
  return {y.begin(), y.end()};
}

void finalize(StrategySet& fs, const RelationGraph& g) {
  fs.num_arms = g.num_arms();
  fs.y_sets.clear();
  fs.y_sets.reserve(fs.strategies.size());
  fs.max_y_size = 0;
  for (const auto& s : fs.strategies) {
    fs.y_sets.push_back(union_of_neighborhoods(g, s));
    fs.max_y_size = std::max(fs.max_y_size, static_cast<int>(fs.y_sets.back().size()));
  }
}

bool is_independent(const RelationGraph& g, const std::vector<int>& arms) {
  for (std::size_t a = 0; a < arms.size(); ++a)
    for (std::size_t b = a + 1; b < arms.size(); ++b)
      if (g.adjacent(arms[a], arms[b])) return false;
  return true;
}

void enumerate_rec(const RelationGraph& g, StrategyConstraint constraint, int target_size,
                   int start, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out, std::size_t cap) {
  if (static_cast<int>(cur.size()) == target_size) {
    if (out.size() >= cap)
      throw std::length_error("feasible strategy set exceeds cap of " +
                              std::to_string(cap) + " strategies");
    out.push_back(cur);
    return;
  }
  for (int i = start; i < g.num_arms(); ++i) {
    if (constraint == StrategyConstraint::IndependentSets) {
      bool ok = true;
      for (int j : cur)
        if (g.adjacent(i, j)) {
          ok = false;
          break;
        }
      if (!ok) continue;
    }
    cur.push_back(i);
    enumerate_rec(g, constraint, target_size, i + 1, cur, out, cap);
    cur.pop_back();
  }
}

}  // namespace

StrategySet enumerate_feasible(const RelationGraph& g, StrategyConstraint constraint,
                               int max_cardinality, std::size_t cap) {
  if (max_cardinality < 1)
    throw std::invalid_argument("strategy cardinality must be at least 1");
  if (constraint == StrategyConstraint::ExplicitList)
    throw std::invalid_argument("explicit-list strategies come from make_strategy_set");
  StrategySet fs;
  fs.max_cardinality = max_cardinality;
  std::vector<int> cur;
  int lo = (constraint == StrategyConstraint::ExactSize) ? max_cardinality : 1;
  for (int m = lo; m <= max_cardinality; ++m)
    enumerate_rec(g, constraint, m, 0, cur, fs.strategies, cap);
  finalize(fs, g);
  return fs;
}

StrategySet make_strategy_set(const RelationGraph& g,
                              std::vector<std::vector<int>> strategies,
                              int max_cardinality) {
  StrategySet fs;
  fs.max_cardinality = max_cardinality;
  for (auto& s : strategies) {
    if (s.empty()) throw std::invalid_argument("empty strategy");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("strategy with repeated arm");
    if (s.front() < 0 || s.back() >= g.num_arms())
      throw std::invalid_argument("strategy arm out of range");
    if (static_cast<int>(s.size()) > max_cardinality)
      throw std::invalid_argument("strategy larger than max cardinality M");
  }
  fs.strategies = std::move(strategies);
  finalize(fs, g);
  return fs;
}

StrategySet read_strategy_list_file(const RelationGraph& g, const std::string& path,
                                    int max_cardinality) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open strategy list: " + path);
  std::vector<std::vector<int>> strategies;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<int> s;
    int v;
    while (ls >> v) s.push_back(v);
    if (!s.empty()) strategies.push_back(std::move(s));
  }
  return make_strategy_set(g, std::move(strategies), max_cardinality);
}

StrategyGraph build_strategy_graph(const StrategySet& fs, const RelationGraph& g,
                                   StrategyEdgeRule rule) {
  (void)g;  // Y-sets were precomputed over g at construction
  const std::size_t n = fs.size();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool y_in_x = std::includes(fs.y_sets[x].begin(), fs.y_sets[x].end(),
                                  fs.strategies[y].begin(), fs.strategies[y].end());
      bool x_in_y = std::includes(fs.y_sets[y].begin(), fs.y_sets[y].end(),
                                  fs.strategies[x].begin(), fs.strategies[x].end());
      bool edge = (rule == StrategyEdgeRule::Mutual) ? (y_in_x && x_in_y)
                                                     : (y_in_x || x_in_y);
      if (edge) edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
    }
  }
  StrategyGraph sg;
  sg.base = &fs;
  sg.graph = RelationGraph(static_cast<int>(n), edges);
  return sg;
}

int argmax_strategy(const StrategySet& fs, const std::vector<double>& per_arm_scores,
                    ScoreMode mode, Rng& rng) {
  if (fs.strategies.empty()) throw std::invalid_argument("empty strategy set");
  if (static_cast<int>(per_arm_scores.size()) != fs.num_arms)
    throw std::invalid_argument("score vector length mismatch");
  std::vector<double> totals(fs.size());
  for (std::size_t x = 0; x < fs.size(); ++x) {
    const auto& arms =
        (mode == ScoreMode::SumOverComponents) ? fs.strategies[x] : fs.y_sets[x];
    double sum = 0.0;
    for (int i : arms) sum += per_arm_scores[i];
    totals[x] = sum;
  }
  return argmax_tiebreak(totals, rng);
}

}  // namespace netbandit
