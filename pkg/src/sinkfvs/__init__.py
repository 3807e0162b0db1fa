"""Feedback vertex set heuristics built around Sinkhorn-Knopp matrix scaling."""
from .bounds import LowerBoundCertificate, lower_bound, pack_cycles
from .digraph import (
    DiGraph,
    GraphError,
    exclude,
    from_edge_list,
    induced_subgraph,
    is_acyclic,
    nontrivial_sccs,
)
from .generators import gen_erdos_renyi, gen_k_regular, two_switch
from .graphio import ParseError, parse_graph, write_graph
from .reductions import ll_reduce
from .scaling import (
    GuardError,
    ScalingState,
    augment_with_loops,
    count_dcu,
    entropy,
    matrix_balance,
    permanent,
    sinkhorn_balance,
    sinkhorn_pass,
    sinkhorn_selection,
)
from .solvers import (
    FvsResult,
    exact_min_fvs,
    fvs_maxdeg,
    fvs_mfvsmean,
    fvs_sinkhorn,
    fvs_sinkhorn_mod,
    maxdeg_selection,
    mfvsmean_selection,
    remove_redundant,
    stationary_distribution,
)
