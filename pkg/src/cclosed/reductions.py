"""Reduction rules, the two Hitting-Set reductions and the kernelizations."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, islice
from math import comb

from .closure import critical_edges
from .errors import InputError, ResourceLimitError, UnsupportedError
from .graph import Graph, bad_pair_masks, iter_bits, popcount
from .hitting_set import HittingSetInstance, expressive_kernel

HS_SET_GUARD = 10**6


@dataclass
class KernelOutput:
    graph: Graph
    k: int
    # kernel vertex -> vertex id in the input graph
    old_id_map: dict
    # bad pairs of which every solution must contain a vertex
    certificate_hooks: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)


def rule1_noncritical_edge(g: Graph, c: int, stats: dict | None = None) -> Graph:
    """Exhaustively drop edges that are not critical and have < c common neighbors.

    Dropping such an edge neither creates nor destroys a bad pair, so the
    critical set is computed once; only the common-neighbor counts need to
    be re-examined until nothing changes.
    """
    if c < 1:
        raise InputError(f"c must be >= 1, got {c}")
    crit = critical_edges(g, c)
    adj = list(g.adj)
    candidates = [e for e in g.edges() if e not in crit]
    removed = 0
    changed = True
    while changed:
        changed = False
        rest = []
        for u, v in candidates:
            if popcount(adj[u] & adj[v]) < c:
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
                removed += 1
                changed = True
            else:
                rest.append((u, v))
        candidates = rest
    if stats is not None:
        stats["rule1_edges_removed"] = stats.get("rule1_edges_removed", 0) + removed
    return Graph(g.n, adj, g.labels)


def forced_pair_rule(g: Graph, c: int, k: int) -> list[tuple[int, int]]:
    """Bad pairs with at least k + c connectors; any solution of size <= k hits each."""
    return [(u, v) for u, v, conn in bad_pair_masks(g, c) if popcount(conn) >= k + c]


def rule2_x_kernel(g: Graph, c: int, k: int) -> KernelOutput:
    """Delete vertices outside X that connect only heavy bad pairs, until none is left.

    A bad pair is heavy while it has more than k + c connectors outside X.
    Deleting such a connector never changes X, and pair counts only go down,
    so one pass in id order reaches the same fixpoint as re-marking after
    every single deletion.
    """
    if k < 0:
        raise InputError(f"k must be >= 0, got {k}")
    pairs = bad_pair_masks(g, c)
    x_mask = 0
    for u, v, _ in pairs:
        x_mask |= 1 << u | 1 << v
    outside = [conn & ~x_mask for _, _, conn in pairs]
    count = [popcount(m) for m in outside]
    limit = k + c
    deleted = 0
    for w in range(g.n):
        if x_mask >> w & 1:
            continue
        mine = [i for i, m in enumerate(outside) if m >> w & 1]
        if all(count[i] > limit for i in mine):
            deleted |= 1 << w
            for i in mine:
                count[i] -= 1
    keep = [v for v in range(g.n) if not deleted >> v & 1]
    heavy = [(u, v) for (u, v, _), cnt in zip(pairs, count) if cnt > limit]
    weak = len(pairs) - len(heavy)
    kernel = g.induced(keep)
    return KernelOutput(
        kernel, k, dict(enumerate(keep)), heavy,
        {"x": popcount(x_mask), "weak_pairs": weak, "heavy_pairs": len(heavy),
         "removed": g.n - len(keep)},
    )


def reduce_hittingset_to_ccvd(hs: HittingSetInstance) -> tuple[Graph, int, int]:
    """Split graph whose c-CVD answer (c = d) equals the hitting-set answer.

    Vertex layout: universe elements first (in ``hs.universe`` order), then
    the padding elements, then ``v_A, u_A`` for each set in canonical order.
    Universe and padding together form a clique.
    """
    d = hs.d
    if d < 2:
        raise UnsupportedError("the construction needs d >= 2")
    vid = {x: i for i, x in enumerate(hs.universe)}
    nxt = len(vid)
    padded = []
    for s in hs.sets:
        members = [vid[x] for x in s]
        for _ in range(d - len(s)):
            members.append(nxt)
            nxt += 1
        padded.append(members)
    clique_size = nxt
    n = clique_size + 2 * len(padded)
    edges = list(combinations(range(clique_size), 2))
    for i, members in enumerate(padded):
        va, ua = clique_size + 2 * i, clique_size + 2 * i + 1
        for w in members:
            edges.append((w, va))
            edges.append((w, ua))
    return Graph.from_edges(n, edges), d, hs.k


def hs_set_count(g: Graph, c: int, k: int) -> int:
    return sum(comb(min(popcount(conn), k + c), c) for _, _, conn in bad_pair_masks(g, c))


def reduce_ccvd_to_hittingset(g: Graph, c: int, k: int, guard: int = HS_SET_GUARD) -> HittingSetInstance:
    """One (c+2)-set per FSG; a pair with >= k+c connectors only uses its k+c smallest."""
    total = hs_set_count(g, c, k)
    if total > guard:
        raise ResourceLimitError(f"reduction would create {total} sets (guard {guard})")
    sets = []
    for u, v, conn in bad_pair_masks(g, c):
        pool = list(islice(iter_bits(conn), k + c))
        for sub in combinations(pool, c):
            sets.append((u, v, *sub))
    return HittingSetInstance(g.n, tuple(sets), c + 2, k)


def kernelize_parameter_k(g: Graph, c: int, k: int, guard: int = HS_SET_GUARD) -> KernelOutput:
    """Kernel with at most (c+2)(k+1)^(c+2) vertices via the expressive hitting-set kernel."""
    if k < 0:
        raise InputError(f"k must be >= 0, got {k}")
    forced = forced_pair_rule(g, c, k)
    if g.n <= k ** (c + 2):
        return KernelOutput(g, k, {v: v for v in range(g.n)}, forced, {"identity": 1})
    hs = reduce_ccvd_to_hittingset(g, c, k, guard)
    kern = expressive_kernel(hs)
    keep = list(kern.universe)
    return KernelOutput(
        g.induced(keep), k, dict(enumerate(keep)), forced,
        {"identity": 0, "hs_sets": len(hs.sets), "kernel_sets": len(kern.sets)},
    )
