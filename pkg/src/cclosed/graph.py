"""Undirected simple graphs with bitset adjacency, plus the closure primitives.

Vertices are dense ids ``0..n-1``.  Adjacency is held as one Python ``int``
bitmask per vertex; bit ``u`` of ``adj[v]`` is set iff ``{u, v}`` is an edge.
Intersections of neighborhoods are therefore a single ``&`` and a popcount.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .errors import InputError, ResourceLimitError

BRUTE_FORCE_GUARD = 10**8


def popcount(mask: int) -> int:
    return mask.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable undirected simple graph.

    ``labels[i]`` is the id vertex ``i`` had in the graph this one was derived
    from (identity for freshly built graphs), so vertex deletions can be traced
    back to the original instance.
    """

    __slots__ = ("n", "adj", "labels", "_nbrs", "_m")

    def __init__(self, n: int, adj: Iterable[int], labels: Iterable[int] | None = None):
        adj = tuple(adj)
        if len(adj) != n:
            raise InputError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise InputError(f"vertex {v} has a neighbor id >= n={n}")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj
        self.labels = tuple(range(n)) if labels is None else tuple(labels)
        if len(self.labels) != n:
            raise InputError("labels must have one entry per vertex")
        self._nbrs = None
        self._m = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an id outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    def neighbors(self, v: int) -> tuple[int, ...]:
        if self._nbrs is None:
            self._nbrs = tuple(tuple(iter_bits(row)) for row in self.adj)
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    @property
    def m(self) -> int:
        if self._m is None:
            self._m = sum(popcount(row) for row in self.adj) // 2
        return self._m

    @property
    def max_degree(self) -> int:
        return max((popcount(row) for row in self.adj), default=0)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InputError(f"vertex id {v!r} out of range 0..{self.n - 1}")

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.adj[v]
                frontier = reach & ~comp
                comp |= frontier
            seen |= comp
            out.append(list(iter_bits(comp)))
        return out

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Subgraph induced by ``keep``; vertices are renumbered in increasing order."""
        keep = sorted(set(keep))
        for v in keep:
            self.check_vertex(v)
        new_id = {old: i for i, old in enumerate(keep)}
        adj = []
        for old in keep:
            row = 0
            for u in iter_bits(self.adj[old]):
                j = new_id.get(u)
                if j is not None:
                    row |= 1 << j
            adj.append(row)
        return Graph(len(keep), adj, [self.labels[old] for old in keep])

    def with_edges_removed(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, adj, self.labels)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass
class SolveResult:
    """Outcome of a solver.

    ``solution`` is ``None`` for a no-answer; ``lower_bound`` then holds the
    smallest solution size that was not ruled out.
    """

    solution: frozenset | None
    optimal: bool
    stats: dict = field(default_factory=dict)
    lower_bound: int | None = None

    @property
    def feasible(self) -> bool:
        return self.solution is not None

    @property
    def size(self) -> int | None:
        return None if self.solution is None else len(self.solution)


def common_neighbors(g: Graph, u: int, v: int) -> list[int]:
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise InputError("common_neighbors needs two distinct vertices")
    return list(iter_bits(g.adj[u] & g.adj[v]))


def _max_nonadjacent_common(adj, alive: int) -> int:
    best = 0
    for u in iter_bits(alive):
        row = adj[u] & alive
        # only partners v > u that are not adjacent
        rest = alive & ~row & ~((2 << u) - 1)
        for v in iter_bits(rest):
            cnt = popcount(row & adj[v])
            if cnt > best:
                best = cnt
    return best


def closed_within(adj, alive: int, c: int) -> bool:
    """True iff the subgraph induced by ``alive`` has no bad pair for ``c``."""
    for u in iter_bits(alive):
        row = adj[u] & alive
        if popcount(row) < c:
            continue
        rest = alive & ~row & ~((2 << u) - 1)
        for v in iter_bits(rest):
            if popcount(row & adj[v]) >= c:
                return False
    return True


def is_c_closed(g: Graph, c: int) -> bool:
    if c < 1:
        raise InputError(f"c must be >= 1, got {c}")
    return closed_within(g.adj, g.full_mask, c)


def closure_number(g: Graph) -> int:
    return 1 + _max_nonadjacent_common(g.adj, g.full_mask)


def weak_closure_number(g: Graph, order: list | None = None) -> int:
    """Elimination-order computation of the weak closure number.

    Each round removes the vertex whose largest common neighborhood with a
    nonneighbor is smallest (ties to the smallest id); the result is the
    largest such minimum seen.  Pass a list as ``order`` to receive the
    elimination sequence.
    """
    adj = g.adj
    alive = g.full_mask
    gamma = 0
    while alive:
        best_v, best_score = -1, None
        for v in iter_bits(alive):
            row = adj[v] & alive
            others = alive & ~row & ~(1 << v)
            score = 0
            for u in iter_bits(others):
                cnt = popcount(row & adj[u])
                if cnt > score:
                    score = cnt
            if best_score is None or score < best_score:
                best_v, best_score = v, score
        gamma = max(gamma, best_score)
        alive &= ~(1 << best_v)
        if order is not None:
            order.append(best_v)
    return gamma


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """``G - S``; the result's ``labels`` map new ids back to ids of ``g``'s origin."""
    s = set(s)
    for v in s:
        g.check_vertex(v)
    return g.induced(v for v in range(g.n) if v not in s)


def old_to_new(h: Graph) -> dict:
    return {old: new for new, old in enumerate(h.labels)}


def bad_pair_masks(g: Graph, c: int) -> list[tuple[int, int, int]]:
    """``(u, v, connector_mask)`` for every nonadjacent pair with >= c common neighbors."""
    out = []
    adj = g.adj
    for u in range(g.n):
        row = adj[u]
        if popcount(row) < c:
            continue
        rest = g.full_mask & ~row & ~((2 << u) - 1)
        for v in iter_bits(rest):
            conn = row & adj[v]
            if popcount(conn) >= c:
                out.append((u, v, conn))
    return out


def brute_force_min_deletion(g: Graph, c: int, k_max: int | None = None,
                             guard: int = BRUTE_FORCE_GUARD) -> SolveResult:
    """Smallest S with G - S c-closed, by enumerating subsets in size order.

    Only subsets of size at most ``k_max`` (default ``n``) are tried.  Raises
    ResourceLimitError when the number of candidate subsets exceeds ``guard``.
    """
    if c < 1:
        raise InputError(f"c must be >= 1, got {c}")
    n = g.n
    if k_max is None or k_max > n:
        k_max = n
    total = sum(comb(n, i) for i in range(k_max + 1))
    if total > guard:
        raise ResourceLimitError(
            f"brute force would try {total} subsets (guard {guard})")
    pairs = [(1 << u | 1 << v, conn) for u, v, conn in bad_pair_masks(g, c)]
    checked = 0
    for size in range(k_max + 1):
        for combo in combinations(range(n), size):
            checked += 1
            s = 0
            for v in combo:
                s |= 1 << v
            for ends, conn in pairs:
                if not ends & s and popcount(conn & ~s) >= c:
                    break
            else:
                return SolveResult(frozenset(combo), True, {"subsets": checked})
    return SolveResult(None, False, {"subsets": checked}, lower_bound=k_max + 1)
