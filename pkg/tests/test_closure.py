from itertools import combinations

import pytest

from cclosed import (
    Graph,
    bad_pair_vertices,
    critical_edges,
    enumerate_bad_pairs,
    enumerate_fsgs,
    is_c_closed,
)
from cclosed.generators import fsg

from conftest import random_graphs


def test_bad_pairs_examples():
    assert enumerate_bad_pairs(Graph.complete(4), 2) == []
    bps = enumerate_bad_pairs(fsg(4), 4)
    assert [(b.u, b.v, b.connectors) for b in bps] == [(0, 1, (2, 3, 4, 5))]
    # K_{2,3}: hubs 0,1 and leaves 2,3,4
    k23 = Graph.complete_bipartite(2, 3)
    got = {(b.u, b.v): b.connectors for b in enumerate_bad_pairs(k23, 2)}
    assert got == {(0, 1): (2, 3, 4), (2, 3): (0, 1), (2, 4): (0, 1), (3, 4): (0, 1)}


def test_bad_pair_vertices_examples():
    assert bad_pair_vertices(Graph.complete(5), 2) == frozenset()
    # plain C4: both diagonals are bad pairs
    assert bad_pair_vertices(fsg(2, 0), 2) == frozenset(range(4))
    assert bad_pair_vertices(fsg(2, 1), 2) == frozenset({0, 1})
    assert bad_pair_vertices(fsg(3, 0b111), 3) == frozenset({0, 1})


def test_enumerate_fsgs_counts():
    assert len(enumerate_fsgs(fsg(3), 3)) == 1
    g = Graph.complete_bipartite(2, 4)
    hub = [f for f in enumerate_fsgs(g, 3) if (f.u, f.v) == (0, 1)]
    assert len(hub) == 4  # C(c+1, c) with c = 3
    hub2 = [f for f in enumerate_fsgs(g, 2) if (f.u, f.v) == (0, 1)]
    assert len(hub2) == 6
    assert [f.connectors for f in hub2] == list(combinations(range(2, 6), 2))


def test_enumerate_fsgs_cap():
    g = Graph.complete_bipartite(2, 4)
    cut = []
    capped = enumerate_fsgs(g, 2, cap_per_pair=3, truncated=cut)
    assert len([f for f in capped if (f.u, f.v) == (0, 1)]) == 3
    assert (0, 1) in cut
    with pytest.raises(ValueError):
        enumerate_fsgs(g, 2, cap_per_pair=0)


def test_critical_edges_examples():
    assert critical_edges(Graph.complete(5), 2) == frozenset()
    g = fsg(3)
    assert critical_edges(g, 3) == frozenset(g.edges())
    assert len(g.edges()) == 6
    assert critical_edges(Graph.cycle(4), 2) == frozenset(Graph.cycle(4).edges())


def test_fsg_witnesses_are_not_closed():
    for g in random_graphs(150, range(4, 9), (0.3, 0.5, 0.7), seed=11):
        for c in (1, 2, 3):
            assert is_c_closed(g, c) == (enumerate_bad_pairs(g, c) == [])
            for f in enumerate_fsgs(g, c):
                sub = g.induced(f.vertices)
                assert sub.n == c + 2
                assert not is_c_closed(sub, c)


def _critical_by_definition(g, c):
    """Critical edges from an uncapped brute-force scan of all (c+2)-subsets."""
    out = set()
    for verts in combinations(range(g.n), c + 2):
        for u, v in combinations(verts, 2):
            if g.has_edge(u, v):
                continue
            rest = [w for w in verts if w not in (u, v)]
            if all(g.has_edge(u, w) and g.has_edge(v, w) for w in rest):
                for w in rest:
                    out.add((min(u, w), max(u, w)))
                    out.add((min(v, w), max(v, w)))
    return out


def test_critical_edges_cross_check():
    for g in random_graphs(120, range(3, 9), (0.3, 0.5, 0.7), seed=5):
        for c in (1, 2, 3):
            crit = critical_edges(g, c)
            assert crit == _critical_by_definition(g, c)
            x = bad_pair_vertices(g, c)
            for u, w in crit:
                assert u in x or w in x
