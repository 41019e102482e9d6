"""d-Hitting Set instances, a brute-force oracle and the expressive kernel."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import InputError, ResourceLimitError
from .graph import BRUTE_FORCE_GUARD


@dataclass(frozen=True)
class HittingSetInstance:
    """Family ``sets`` over elements ``0..universe_size-1``, each set of size <= d.

    ``universe`` lists the elements actually in play; it defaults to all ids
    and shrinks when a kernel discards elements.  Sets are canonicalized on
    construction: sorted tuples, duplicates dropped, ordered by (size, tuple).
    """

    universe_size: int
    sets: tuple
    d: int
    k: int
    universe: tuple | None = None

    def __post_init__(self):
        if self.k < 0:
            raise InputError(f"budget k must be >= 0, got {self.k}")
        if self.d < 1:
            raise InputError(f"d must be >= 1, got {self.d}")
        canon = set()
        for s in self.sets:
            t = tuple(sorted(set(s)))
            if not t:
                raise InputError("hitting-set family contains an empty set")
            if len(t) > self.d:
                raise InputError(f"set {t} is larger than d={self.d}")
            if t[0] < 0 or t[-1] >= self.universe_size:
                raise InputError(f"set {t} has an element outside 0..{self.universe_size - 1}")
            canon.add(t)
        object.__setattr__(self, "sets", tuple(sorted(canon, key=lambda t: (len(t), t))))
        if self.universe is None:
            object.__setattr__(self, "universe", tuple(range(self.universe_size)))
        else:
            uni = tuple(sorted(set(self.universe)))
            members = set(uni)
            for t in self.sets:
                if not members.issuperset(t):
                    raise InputError(f"set {t} uses elements outside the universe")
            object.__setattr__(self, "universe", uni)

    def is_hitting_set(self, h) -> bool:
        h = set(h)
        return all(not h.isdisjoint(s) for s in self.sets)

    def is_minimal_hitting_set(self, h) -> bool:
        h = set(h)
        if not self.is_hitting_set(h):
            return False
        return all(not self.is_hitting_set(h - {x}) for x in h)


def brute_force_hitting_set(hs: HittingSetInstance, k_max: int | None = None,
                            guard: int = BRUTE_FORCE_GUARD):
    """Smallest hitting set of size <= k_max (default ``hs.k``), or ``None``."""
    if k_max is None:
        k_max = hs.k
    elements = sorted({x for s in hs.sets for x in s})
    k_max = min(k_max, len(elements))
    total = sum(comb(len(elements), i) for i in range(k_max + 1))
    if total > guard:
        raise ResourceLimitError(f"brute force would try {total} subsets (guard {guard})")
    masks = []
    index = {x: i for i, x in enumerate(elements)}
    for s in hs.sets:
        m = 0
        for x in s:
            m |= 1 << index[x]
        masks.append(m)
    for size in range(k_max + 1):
        for combo in combinations(range(len(elements)), size):
            h = 0
            for i in combo:
                h |= 1 << i
            if all(m & h for m in masks):
                return frozenset(elements[i] for i in combo)
    return None


def all_hitting_sets(hs: HittingSetInstance, k_max: int, universe=None) -> set:
    """Every hitting set of size <= k_max drawn from ``universe`` (oracle helper)."""
    if universe is None:
        universe = hs.universe
    found = set()
    for size in range(k_max + 1):
        for combo in combinations(sorted(universe), size):
            if hs.is_hitting_set(combo):
                found.add(frozenset(combo))
    return found


def expressive_kernel(hs: HittingSetInstance) -> HittingSetInstance:
    """Keep a subfamily that has exactly the same hitting sets of size <= k.

    Sets are scanned in canonical order.  A set is kept unless some subset T
    of it is already contained in (k+1)^(d-|T|) kept sets; in that case every
    hitting set of size <= k of the kept sets must meet T.  The empty T caps
    the kept family at (k+1)^d sets.
    """
    k, d = hs.k, hs.d
    counts: dict[tuple, int] = {}
    kept = []
    for s in hs.sets:
        subsets = [t for r in range(len(s) + 1) for t in combinations(s, r)]
        if any(counts.get(t, 0) >= (k + 1) ** (d - len(t)) for t in subsets):
            continue
        kept.append(s)
        for t in subsets:
            counts[t] = counts.get(t, 0) + 1
    elements = sorted({x for s in kept for x in s})
    return HittingSetInstance(hs.universe_size, tuple(kept), d, k, universe=tuple(elements))
