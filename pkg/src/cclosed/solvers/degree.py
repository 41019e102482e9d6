from __future__ import annotations

from ..errors import InputError
from ..graph import Graph, SolveResult, brute_force_min_deletion
from ..reductions import rule1_noncritical_edge


def solve_degree_bounded(g: Graph, c: int) -> SolveResult:
    """Exact solver for c = 2 with max degree <= 2 and c = 3 with max degree <= 3.

    After Rule 1 every component is tiny (<= 4 resp. <= 6 vertices), so each
    is solved by brute force and the optima are combined.
    """
    delta = g.max_degree
    if not ((c == 2 and delta <= 2) or (c == 3 and delta <= 3)):
        raise InputError(f"needs c in {{2, 3}} and max degree <= c; got c={c}, max degree {delta}")
    stats = {}
    h = rule1_noncritical_edge(g, c, stats)
    solution = set()
    largest = 0
    nontrivial = 0
    for comp in h.components():
        if len(comp) == 1:
            continue
        nontrivial += 1
        largest = max(largest, len(comp))
        sub = h.induced(comp)
        res = brute_force_min_deletion(sub, c)
        solution.update(comp[v] for v in res.solution)
    stats["components"] = nontrivial
    stats["max_component"] = largest
    return SolveResult(frozenset(solution), True, stats)
