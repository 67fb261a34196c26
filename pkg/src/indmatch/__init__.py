"""Induced matching algorithms: greedy, local search, exact oracle,
instance generators, and a bound-checking harness."""

from .graph import (
    DegeneracyResult,
    EdgeAbsentError,
    Graph,
    GraphError,
    build_graph,
    conflict_set,
    conflict_size,
    degeneracy,
    is_c3c5_free,
    is_induced_matching,
    parse_edge_list,
    private_conflicts,
    read_edge_list,
    regular_degree,
    remove_conflicts,
    write_edge_list,
)
from .greedy import (
    GreedyStep,
    GreedyTrace,
    InternalInvariantError,
    PreconditionError,
    StrongColoring,
    approx_bip,
    approx_bip_detail,
    degenerate_greedy,
    find_cheap_edge,
    greedy_f,
    greedy_strong_coloring,
    lemma_threshold,
    local_search,
)
from .exact import ExactResult, exact_induced_matching, upper_bound_regular
from .generators import (
    GenSpec,
    GenerationError,
    gen_bipartite_regular,
    gen_k_degenerate,
    gen_random_regular,
    named_instance,
)
from .harness import (
    BoundCheck,
    BoundReport,
    VerifyConfig,
    run_benchmark,
    theorem1_ratio_bound,
    verify_instance,
    verify_lemma2_residual,
)

__version__ = "0.1.0"
