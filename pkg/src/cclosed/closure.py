"""Bad pairs, forbidden-subgraph witnesses and critical edges."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, islice

from .errors import InputError
from .graph import Graph, bad_pair_masks, iter_bits


@dataclass(frozen=True)
class BadPair:
    u: int
    v: int
    connectors: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class Fsg:
    """A forbidden subgraph: one designated bad pair and exactly c of its connectors."""

    u: int
    v: int
    connectors: tuple[int, ...]

    @property
    def vertices(self) -> frozenset:
        return frozenset((self.u, self.v, *self.connectors))


def _check_c(c):
    if c < 1:
        raise InputError(f"c must be >= 1, got {c}")


def enumerate_bad_pairs(g: Graph, c: int) -> list[BadPair]:
    _check_c(c)
    return [BadPair(u, v, tuple(iter_bits(conn))) for u, v, conn in bad_pair_masks(g, c)]


def bad_pair_vertices(g: Graph, c: int) -> frozenset:
    _check_c(c)
    x = set()
    for u, v, _ in bad_pair_masks(g, c):
        x.add(u)
        x.add(v)
    return frozenset(x)


def enumerate_fsgs(g: Graph, c: int, cap_per_pair: int | None = None,
                   truncated: list | None = None) -> list[Fsg]:
    """All FSG witnesses in lexicographic order, at most ``cap_per_pair`` per bad pair.

    Bad pairs whose witnesses were cut off are appended to ``truncated`` when
    a list is passed.
    """
    if cap_per_pair is not None and cap_per_pair < 1:
        raise InputError("cap_per_pair must be >= 1")
    out = []
    for bp in enumerate_bad_pairs(g, c):
        subsets = combinations(bp.connectors, c)
        if cap_per_pair is not None:
            subsets = list(islice(subsets, cap_per_pair + 1))
            if len(subsets) > cap_per_pair:
                subsets.pop()
                if truncated is not None:
                    truncated.append((bp.u, bp.v))
        out.extend(Fsg(bp.u, bp.v, sub) for sub in subsets)
    return out


def critical_edges(g: Graph, c: int) -> frozenset:
    """Edges between a bad-pair vertex and one of that pair's connectors.

    Any connector of a pair with >= c connectors lies in some size-c subset,
    so no witness enumeration is needed.  Edges are returned as ``(min, max)``.
    """
    _check_c(c)
    out = set()
    for u, v, conn in bad_pair_masks(g, c):
        for w in iter_bits(conn):
            out.add((min(u, w), max(u, w)))
            out.add((min(v, w), max(v, w)))
    return frozenset(out)
