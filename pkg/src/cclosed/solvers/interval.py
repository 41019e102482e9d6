"""Greedy exact solver for unit interval graphs of depth at most c + 1."""

from __future__ import annotations

from itertools import combinations

from ..errors import InputError
from ..graph import Graph, SolveResult, bad_pair_masks, iter_bits


class IntervalRepresentation:
    """Unit-length closed intervals ``[start, start + 1]``, one per vertex.

    Vertex ``v`` has interval start ``starts[v]``; ``labels[v]`` is the id it
    carried in the input file.  ``order`` lists vertices by nondecreasing
    start, ties broken by vertex id.
    """

    def __init__(self, starts, labels=None):
        self.starts = tuple(starts)
        self.labels = tuple(range(len(self.starts))) if labels is None else tuple(labels)
        if len(self.labels) != len(self.starts):
            raise InputError("labels must have one entry per interval")
        self.order = sorted(range(len(self.starts)), key=lambda v: (self.starts[v], v))

    @property
    def n(self) -> int:
        return len(self.starts)

    def sorted_starts(self) -> list:
        return [self.starts[v] for v in self.order]

    def depth(self) -> int:
        """Largest number of intervals sharing a point (two-pointer sweep)."""
        ls = self.sorted_starts()
        best = 0
        lo = 0
        for hi, x in enumerate(ls):
            while ls[lo] < x - 1:
                lo += 1
            best = max(best, hi - lo + 1)
        return best

    def to_graph(self) -> Graph:
        ls = self.sorted_starts()
        edges = []
        for a in range(len(ls)):
            b = a + 1
            while b < len(ls) and ls[b] <= ls[a] + 1:
                edges.append((self.order[a], self.order[b]))
                b += 1
        return Graph.from_edges(self.n, edges)


def _check_depth(rep, c):
    depth = rep.depth()
    if depth > c + 1:
        raise InputError(f"interval depth {depth} exceeds c + 1 = {c + 1}")


def solve_unit_interval(rep: IntervalRepresentation, c: int) -> SolveResult:
    _check_depth(rep, c)
    ls = rep.sorted_starts()
    n = len(ls)

    def check_fsg(i):
        last = ls[i + c + 1]
        right = ls[i] + 1
        for h in range(1, c + 1):
            if not (ls[i + h] <= right and ls[i + h] + 1 >= last):
                return False
        return True

    picked = []
    windows = []
    i = 0
    while i + c + 1 < n:
        if check_fsg(i):
            picked.append(rep.order[i + c + 1])
            windows.append(i)
            i += c + 2
        else:
            i += 1
    # the chosen windows are pairwise disjoint FSGs, so |S| is also a lower bound
    for a, b in zip(windows, windows[1:]):
        assert b >= a + c + 2
    for a in windows:
        assert ls[a + c + 1] > ls[a] + 1, "window endpoints must be nonadjacent"
    stats = {"windows": len(windows), "lower_bound": len(windows)}
    return SolveResult(frozenset(picked), True, stats)


def verify_fsg_window_structure(rep: IntervalRepresentation, c: int) -> bool:
    """Check that every FSG is a window of c+2 consecutive intervals with the ends as bad pair."""
    _check_depth(rep, c)
    g = rep.to_graph()
    pos = {v: p for p, v in enumerate(rep.order)}
    for u, v, conn in bad_pair_masks(g, c):
        a, b = sorted((pos[u], pos[v]))
        for sub in combinations(iter_bits(conn), c):
            inner = sorted(pos[w] for w in sub)
            if b != a + c + 1 or inner != list(range(a + 1, b)):
                return False
    return True
