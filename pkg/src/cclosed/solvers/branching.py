"""Bounded search tree over forbidden subgraphs."""

from __future__ import annotations

from ..graph import Graph, SolveResult, bad_pair_masks, iter_bits, popcount
from ..reductions import rule1_noncritical_edge


def _packing_bound(active, alive, c):
    # greedy vertex-disjoint FSGs; each needs its own deletion
    used = 0
    count = 0
    for u, v, conn, _ in active:
        ends = 1 << u | 1 << v
        if ends & used:
            continue
        free = conn & alive & ~used
        if popcount(free) < c:
            continue
        take = 0
        for w in iter_bits(free):
            take |= 1 << w
            if popcount(take) == c:
                break
        used |= ends | take
        count += 1
    return count


def solve_branching(g: Graph, c: int, k: int) -> SolveResult:
    """Decide (G, k) exactly; a yes-answer carries a minimum solution.

    Rule 1 is applied once up front (it preserves the set of solutions, not
    just the answer).  Budgets 0..k are tried in turn, so the first solution
    found is minimum.  In each node a bad pair with >= budget + c connectors
    is a two-way branch on its endpoints; otherwise the pair with the fewest
    connectors yields one FSG and a (c+2)-way branch.
    """
    stats = {"nodes": 0, "forced_branches": 0, "fsg_branches": 0, "pruned": 0}
    h = rule1_noncritical_edge(g, c, stats)
    pairs = bad_pair_masks(h, c)

    def search(alive, budget):
        stats["nodes"] += 1
        active = []
        for u, v, conn in pairs:
            if alive >> u & 1 and alive >> v & 1:
                cnt = popcount(conn & alive)
                if cnt >= c:
                    active.append((u, v, conn, cnt))
        if not active:
            return []
        if budget == 0:
            return None
        for u, v, conn, cnt in active:
            if cnt >= budget + c:
                stats["forced_branches"] += 1
                for x in (u, v):
                    sub = search(alive & ~(1 << x), budget - 1)
                    if sub is not None:
                        return [x] + sub
                return None
        active.sort(key=lambda t: (t[3], t[0], t[1]))
        if _packing_bound(active, alive, c) > budget:
            stats["pruned"] += 1
            return None
        u, v, conn, _ = active[0]
        fsg = [u, v]
        for w in iter_bits(conn & alive):
            fsg.append(w)
            if len(fsg) == c + 2:
                break
        stats["fsg_branches"] += 1
        for x in fsg:
            sub = search(alive & ~(1 << x), budget - 1)
            if sub is not None:
                return [x] + sub
        return None

    for budget in range(k + 1):
        found = search(h.full_mask, budget)
        if found is not None:
            return SolveResult(frozenset(found), True, stats)
    return SolveResult(None, False, stats, lower_bound=k + 1)
