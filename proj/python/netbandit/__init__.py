"""Graph-aware stochastic multi-armed bandit engine (C++ core)."""

from ._core import (
    BatchResult,
    EpisodeSpec,
    EpisodeSummary,
    RegretTrace,
    RelationGraph,
    StrategySet,
    bound_cso,
    bound_csr,
    bound_sso,
    bound_ssr,
    csr_arm_score,
    cso_index,
    draw_uniform_means,
    enumerate_feasible,
    generate_er,
    greedy_clique_cover,
    make_complete,
    make_path,
    moss_index,
    run_batch,
    run_episode,
    sso_index,
    ssr_index,
    ucb1_index,
)

__all__ = [
    "BatchResult",
    "EpisodeSpec",
    "EpisodeSummary",
    "RegretTrace",
    "RelationGraph",
    "StrategySet",
    "bound_cso",
    "bound_csr",
    "bound_sso",
    "bound_ssr",
    "csr_arm_score",
    "cso_index",
    "draw_uniform_means",
    "enumerate_feasible",
    "generate_er",
    "greedy_clique_cover",
    "make_complete",
    "make_path",
    "moss_index",
    "run_batch",
    "run_episode",
    "sso_index",
    "ssr_index",
    "ucb1_index",
]
