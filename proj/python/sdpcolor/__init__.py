"""Python access to the sdpcolor C++ core."""

from ._core import (
    Error,
    Graph,
    NotThreeColorableError,
    PreconditionError,
    color_graph,
    edge_prob_for_degree,
    estimate_cover_prob,
    exponents,
    generate_planted,
    greedy_color_count,
    inefficient_threshold,
    is_independent_set,
    is_proper_coloring,
    kms_prime_round,
    kms_round,
    kms_threshold,
    planted_vectors,
    quantile,
    solve_sdp,
    tail,
)

__all__ = [name for name in dir() if not name.startswith("_")]
