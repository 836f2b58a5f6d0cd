"""Minimum fill-in reductions, exact oracles and verification suites."""

from ._core import (  # noqa: F401
    ConsistencyFailure,
    Graph,
    InvalidInput,
    LimitExceeded,
    ReducedInstance,
    brooks_coloring,
    cycle,
    elimination_fill,
    exact_fillin_branch,
    exact_fillin_ordering_oracle,
    exact_vertex_cover,
    fill_equivalence_check,
    from_dimacs,
    full_vertices,
    gnp,
    greedy_fillin,
    induced_subgraph,
    is_chordal,
    is_split,
    mcs_ordering,
    non_edges_within,
    petersen,
    random_regular,
    reduce_colored,
    reduce_primitive,
    run_suite,
    split_completion,
    symbolic_factor,
    vc_via_completion,
    vc_via_fillin,
    verify_fillin,
    verify_sandwich,
)

__version__ = "0.1.0"
