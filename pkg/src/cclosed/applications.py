"""Clique enumeration and independent set on graphs that are c-closed after deleting S."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .errors import InputError
from .graph import Graph, closed_within, iter_bits, mask_of, popcount


@dataclass(frozen=True)
class AlmostClosedDecomposition:
    graph: Graph
    modulator: frozenset
    c: int

    def __post_init__(self):
        object.__setattr__(self, "modulator", frozenset(self.modulator))
        for v in self.modulator:
            self.graph.check_vertex(v)
        rest = self.graph.full_mask & ~mask_of(self.modulator)
        if not closed_within(self.graph.adj, rest, self.c):
            raise InputError(f"G - S is not {self.c}-closed")


def _bron_kerbosch(adj, r, p, x, out):
    if not p and not x:
        out.append(r)
        return
    # pivot maximizing |P & N(u)|
    pivot = max(iter_bits(p | x), key=lambda u: popcount(p & adj[u]))
    for v in iter_bits(p & ~adj[pivot]):
        bit = 1 << v
        _bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out)
        p &= ~bit
        x |= bit


def maximal_cliques_within(g: Graph, candidates: int) -> list[int]:
    """Maximal cliques of G[candidates] as bitmasks (pivoting Bron-Kerbosch)."""
    out = []
    _bron_kerbosch(g.adj, 0, candidates, 0, out)
    return out


def maximal_cliques(g: Graph) -> list[frozenset]:
    return sorted((frozenset(iter_bits(m)) for m in maximal_cliques_within(g, g.full_mask)),
                  key=sorted)


def _subsets(items):
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def enumerate_maximal_cliques(dec: AlmostClosedDecomposition, stats: dict | None = None) -> list[frozenset]:
    """All maximal cliques of G, found by fixing their intersection with S."""
    g = dec.graph
    s_list = sorted(dec.modulator)
    rest = g.full_mask & ~mask_of(s_list)
    found = set()
    branches = 0
    for sub in _subsets(s_list):
        branches += 1
        s_mask = mask_of(sub)
        if any(s_mask & ~(1 << v) & ~g.adj[v] for v in sub):
            continue
        cand = rest
        for v in sub:
            cand &= g.adj[v]
        for k_mask in maximal_cliques_within(g, cand):
            clique = s_mask | k_mask
            # maximal in G: no outside vertex adjacent to all of it
            common = g.full_mask & ~clique
            for v in iter_bits(clique):
                common &= g.adj[v]
            if not common and clique:
                found.add(clique)
    if stats is not None:
        stats["outer_branches"] = branches
    return sorted((frozenset(iter_bits(m)) for m in found), key=sorted)


def max_independent_set_within(g: Graph, candidates: int) -> int:
    """Maximum independent set of G[candidates] as a bitmask (simple branching)."""
    adj = g.adj
    best = [0]

    def go(cand, chosen):
        if popcount(chosen) + popcount(cand) <= popcount(best[0]):
            return
        if not cand:
            best[0] = chosen
            return
        # vertices of degree <= 1 inside cand can always be taken
        for v in iter_bits(cand):
            if popcount(adj[v] & cand) <= 1:
                go(cand & ~adj[v] & ~(1 << v), chosen | 1 << v)
                return
        v = max(iter_bits(cand), key=lambda u: popcount(adj[u] & cand))
        go(cand & ~adj[v] & ~(1 << v), chosen | 1 << v)
        go(cand & ~(1 << v), chosen)

    go(candidates, 0)
    return best[0]


def max_independent_set(dec: AlmostClosedDecomposition, ell: int,
                        solver: Callable[[Graph, int], int] | None = None,
                        stats: dict | None = None) -> frozenset | None:
    """An independent set of size >= ell, or None if G has none.

    ``solver(g, candidate_mask)`` must return a maximum independent set of
    the induced subgraph as a bitmask; it is only ever called on subgraphs of
    the c-closed part G - S.
    """
    if solver is None:
        solver = max_independent_set_within
    g = dec.graph
    s_list = sorted(dec.modulator)
    rest = g.full_mask & ~mask_of(s_list)
    best = None
    branches = 0
    for sub in _subsets(s_list):
        branches += 1
        s_mask = mask_of(sub)
        if any(g.adj[v] & s_mask for v in sub):
            continue
        cand = rest
        for v in sub:
            cand &= ~g.adj[v]
        found = s_mask | solver(g, cand)
        if best is None or popcount(found) > popcount(best):
            best = found
    if stats is not None:
        stats["outer_branches"] = branches
    if best is None or popcount(best) < ell:
        return None
    return frozenset(iter_bits(best))
