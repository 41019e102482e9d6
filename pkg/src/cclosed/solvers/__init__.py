from .branching import solve_branching
from .degree import solve_degree_bounded
from .interval import IntervalRepresentation, solve_unit_interval, verify_fsg_window_structure
from .nd import (
    IlpModel,
    NeighborhoodPartition,
    build_ilp,
    neighborhood_partition,
    solve_ilp_tiny,
    solve_nd_branching,
    write_lp,
)

__all__ = [
    "IlpModel",
    "IntervalRepresentation",
    "NeighborhoodPartition",
    "build_ilp",
    "neighborhood_partition",
    "solve_branching",
    "solve_degree_bounded",
    "solve_ilp_tiny",
    "solve_nd_branching",
    "solve_unit_interval",
    "verify_fsg_window_structure",
    "write_lp",
]
