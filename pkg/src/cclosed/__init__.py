"""Exact algorithms, kernels and reductions for c-Closed Vertex Deletion."""

from .applications import (
    AlmostClosedDecomposition,
    enumerate_maximal_cliques,
    max_independent_set,
    maximal_cliques,
)
from .closure import (
    BadPair,
    Fsg,
    bad_pair_vertices,
    critical_edges,
    enumerate_bad_pairs,
    enumerate_fsgs,
)
from .errors import CClosedError, InputError, ParseError, ResourceLimitError, UnsupportedError
from .graph import (
    Graph,
    SolveResult,
    brute_force_min_deletion,
    closure_number,
    common_neighbors,
    delete_vertices,
    is_c_closed,
    weak_closure_number,
)
from .hitting_set import HittingSetInstance, brute_force_hitting_set, expressive_kernel
from .reductions import (
    KernelOutput,
    forced_pair_rule,
    kernelize_parameter_k,
    reduce_ccvd_to_hittingset,
    reduce_hittingset_to_ccvd,
    rule1_noncritical_edge,
    rule2_x_kernel,
)
from .solvers import (
    IlpModel,
    IntervalRepresentation,
    NeighborhoodPartition,
    build_ilp,
    neighborhood_partition,
    solve_branching,
    solve_degree_bounded,
    solve_ilp_tiny,
    solve_nd_branching,
    solve_unit_interval,
    verify_fsg_window_structure,
    write_lp,
)

__version__ = "0.1.0"
