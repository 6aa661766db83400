// pybind11 bindings exposing the main engine operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netbandit/env.hpp"
#include "netbandit/graph.hpp"
#include "netbandit/io.hpp"
#include "netbandit/policies.hpp"
#include "netbandit/regret.hpp"
#include "netbandit/sim.hpp"
#include "netbandit/strategies.hpp"

namespace py = pybind11;
using namespace netbandit;

PYBIND11_MODULE(_core, m) {
  m.doc() = "graph-aware stochastic multi-armed bandit engine";

  py::class_<RelationGraph>(m, "RelationGraph")
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("num_arms"),
           py::arg("edges"))
      .def_property_readonly("num_arms", &RelationGraph::num_arms)
      .def_property_readonly("num_edges", &RelationGraph::num_edges)
      .def("adjacent", &RelationGraph::adjacent)
      .def("neighbors", &RelationGraph::neighbors)
      .def("closed_neighborhood", &RelationGraph::closed_neighborhood)
      .def("edges", &RelationGraph::edges);

  m.def("generate_er", &generate_er, py::arg("num_arms"), py::arg("p"), py::arg("seed"));
  m.def("make_complete", &make_complete);
  m.def("make_path", &make_path);
  m.def("greedy_clique_cover",
        [](const RelationGraph& g) { return greedy_clique_cover(g).cliques; });

  py::class_<StrategySet>(m, "StrategySet")
      .def_readonly("strategies", &StrategySet::strategies)
      .def_readonly("y_sets", &StrategySet::y_sets)
      .def_readonly("max_cardinality", &StrategySet::max_cardinality)
      .def_readonly("max_y_size", &StrategySet::max_y_size)
      .def("__len__", &StrategySet::size);

  m.def(
      "enumerate_feasible",
      [](const RelationGraph& g, const std::string& constraint, int m) {
        return enumerate_feasible(g, constraint_from_name(constraint), m);
      },
      py::arg("graph"), py::arg("constraint"), py::arg("max_cardinality"));

  m.def("sso_index", &sso_index);
  m.def("cso_index", &cso_index);
  m.def("ssr_index", &ssr_index);
  m.def("csr_arm_score", &csr_arm_score);
  m.def("moss_index", &moss_index);
  m.def("ucb1_index", &ucb1_index);

  m.def("bound_sso", &bound_sso);
  m.def("bound_cso", &bound_cso);
  m.def("bound_ssr", &bound_ssr);
  m.def("bound_csr", &bound_csr);

  py::class_<RegretTrace>(m, "RegretTrace")
      .def_readonly("instant_pseudo", &RegretTrace::instant_pseudo)
      .def_readonly("cum_pseudo", &RegretTrace::cum_pseudo)
      .def_readonly("instant_realized", &RegretTrace::instant_realized)
      .def_readonly("cum_realized", &RegretTrace::cum_realized)
      .def_readonly("actions", &RegretTrace::actions);

  py::class_<EpisodeSpec>(m, "EpisodeSpec")
      .def(py::init<>())
      .def_property(
          "scenario",
          [](const EpisodeSpec& s) { return scenario_name(s.scenario); },
          [](EpisodeSpec& s, const std::string& v) { s.scenario = scenario_from_name(v); })
      .def_readwrite("policy_name", &EpisodeSpec::policy_name)
      .def_readwrite("horizon", &EpisodeSpec::horizon)
      .def_readwrite("num_arms", &EpisodeSpec::num_arms)
      .def_readwrite("graph_spec", &EpisodeSpec::graph_spec)
      .def_readwrite("graph_seed", &EpisodeSpec::graph_seed)
      .def_readwrite("strategy_spec", &EpisodeSpec::strategy_spec)
      .def_property(
          "dist", [](const EpisodeSpec& s) { return dist_name(s.dist); },
          [](EpisodeSpec& s, const std::string& v) { s.dist = dist_from_name(v); })
      .def_readwrite("means", &EpisodeSpec::means)
      .def_readwrite("env_seed", &EpisodeSpec::env_seed)
      .def_readwrite("tie_seed", &EpisodeSpec::tie_seed);

  m.def("run_episode", [](const EpisodeSpec& spec) { return run_episode(spec); });

  py::class_<EpisodeSummary>(m, "EpisodeSummary")
      .def_readonly("policy", &EpisodeSummary::policy)
      .def_readonly("seed", &EpisodeSummary::seed)
      .def_readonly("final_cum_pseudo", &EpisodeSummary::final_cum_pseudo)
      .def_readonly("final_avg_pseudo", &EpisodeSummary::final_avg_pseudo)
      .def_readonly("cum", &EpisodeSummary::cum)
      .def_readonly("avg", &EpisodeSummary::avg);

  py::class_<BatchResult>(m, "BatchResult")
      .def_readonly("checkpoints", &BatchResult::checkpoints)
      .def_readonly("episodes", &BatchResult::episodes)
      .def("csv", [](const BatchResult& r) { return csv_string(r); });

  m.def(
      "run_batch",
      [](const std::string& scenario, const std::vector<std::string>& policies,
         long horizon, int num_arms, const std::string& graph_spec,
         const std::string& strategy_spec, const std::string& dist,
         std::uint64_t master_seed, int num_seeds, int threads) {
        BatchConfig cfg;
        cfg.scenario = scenario_from_name(scenario);
        cfg.policies = policies;
        cfg.horizon = horizon;
        cfg.num_arms = num_arms;
        cfg.graph_spec = graph_spec;
        cfg.strategy_spec = strategy_spec;
        cfg.dist = dist_from_name(dist);
        cfg.master_seed = master_seed;
        cfg.num_seeds = num_seeds;
        cfg.threads = threads;
        return run_batch(cfg);
      },
      py::arg("scenario"), py::arg("policies"), py::arg("horizon"), py::arg("num_arms"),
      py::arg("graph_spec"), py::arg("strategy_spec") = "",
      py::arg("dist") = "bernoulli", py::arg("master_seed") = 1,
      py::arg("num_seeds") = 20, py::arg("threads") = 0);

  m.def("draw_uniform_means", &draw_uniform_means);
}
