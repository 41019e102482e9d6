import random
from itertools import combinations

import pytest

from cclosed import (
    Graph,
    InputError,
    ResourceLimitError,
    UnsupportedError,
    brute_force_min_deletion,
    build_ilp,
    is_c_closed,
    neighborhood_partition,
    rule1_noncritical_edge,
    solve_branching,
    solve_degree_bounded,
    solve_ilp_tiny,
    solve_nd_branching,
)
from cclosed.generators import clique_pendants, fsg, random_degree_bounded, random_twin_graph
from cclosed.graph import delete_vertices
from cclosed.solvers.nd import CLIQUE, INDEPENDENT

from conftest import random_graphs


def oracle(g, c):
    return brute_force_min_deletion(g, c).size


# -- branching ---------------------------------------------------------------

def test_branching_examples():
    res = solve_branching(Graph.complete(5), 2, 0)
    assert res.solution == frozenset() and res.optimal
    res = solve_branching(fsg(3), 3, 1)
    assert res.size == 1 and is_c_closed(delete_vertices(fsg(3), res.solution), 3)
    two = Graph.from_edges(8, [(0, 2), (0, 3), (1, 2), (1, 3), (4, 6), (4, 7), (5, 6), (5, 7)])
    res = solve_branching(two, 2, 1)
    assert not res.feasible and res.lower_bound == 2


def test_branching_forced_pair():
    # hubs with 6 connectors, k = 2, c = 2 -> two-way branch on the hubs
    g = Graph.complete_bipartite(2, 6)
    res = solve_branching(g, 3, 2)
    assert res.size == 1 and res.solution <= {0, 1}
    assert res.stats["forced_branches"] >= 1


def test_branching_matches_oracle():
    for g in random_graphs(300, range(2, 9), (0.3, 0.5, 0.7), seed=1):
        for c in (1, 2, 3):
            best = oracle(g, c)
            for k in (best - 1, best, best + 1):
                if k < 0:
                    continue
                res = solve_branching(g, c, k)
                assert res.feasible == (best <= k)
                if res.feasible:
                    assert res.size == best
                    assert is_c_closed(delete_vertices(g, res.solution), c)


# -- neighborhood diversity --------------------------------------------------

def _twins(g, u, v):
    nu = set(g.neighbors(u)) - {v}
    nv = set(g.neighbors(v)) - {u}
    return nu == nv


def test_partition_examples():
    p = neighborhood_partition(Graph.complete(5))
    assert p.classes == [tuple(range(5))] and p.kinds == [CLIQUE]
    p = neighborhood_partition(Graph.complete_bipartite(2, 3))
    assert p.classes == [(0, 1), (2, 3, 4)] and p.kinds == [INDEPENDENT, INDEPENDENT]
    p = neighborhood_partition(Graph.cycle(5))
    assert p.nd == 5


def test_partition_is_the_twin_relation():
    graphs = list(random_graphs(150, range(1, 9), (0.3, 0.5, 0.7), seed=2))
    graphs += [random_twin_graph(4, 3, seed=s) for s in range(60)]
    for g in graphs:
        p = neighborhood_partition(g)
        assert sorted(v for cl in p.classes for v in cl) == list(range(g.n))
        for u, v in combinations(range(g.n), 2):
            assert (p.class_of[u] == p.class_of[v]) == _twins(g, u, v)
        for members, kind in zip(p.classes, p.kinds):
            if len(members) > 1:
                adjacent = [g.has_edge(a, b) for a, b in combinations(members, 2)]
                assert all(adjacent) if kind == CLIQUE else not any(adjacent)


def test_nd_branching_examples():
    assert solve_nd_branching(Graph.complete(4), 2).solution == frozenset()
    g = clique_pendants(4)
    res = solve_nd_branching(g, 2, 2)
    assert res.feasible and res.size == oracle(g, 2)
    assert is_c_closed(delete_vertices(g, {8, 9}), 2)
    assert is_c_closed(delete_vertices(g, {8, 9}), 1)
    with pytest.raises(UnsupportedError):
        solve_nd_branching(g, 1, 2)


def test_nd_branching_matches_oracle():
    rng = random.Random(7)
    graphs = list(random_graphs(120, range(2, 10), (0.3, 0.5, 0.7), seed=3))
    graphs += [random_twin_graph(rng.randint(2, 5), 3, seed=s) for s in range(80)]
    for g in graphs:
        for c in (2, 3):
            res = solve_nd_branching(g, c)
            assert res.size == oracle(g, c)
            assert is_c_closed(delete_vertices(g, res.solution), c)
            assert res.stats["profiles"] <= (c + 1) ** res.stats["nd"]


def test_nd_branching_no_instance():
    res = solve_nd_branching(Graph.cycle(4), 2, 0)
    assert not res.feasible and res.lower_bound == 1


def test_nd_guard():
    with pytest.raises(ResourceLimitError):
        solve_nd_branching(Graph.cycle(12), 3, guard=10)


# -- ILP ---------------------------------------------------------------------

def _ilp_objective(g, c):
    model = build_ilp(g, c)
    res = solve_ilp_tiny(model, g, c)
    return model, res


def test_ilp_examples():
    g = Graph.complete(4)
    _, res = _ilp_objective(g, 2)
    assert res.stats["objective"] == 4 and res.solution == frozenset()
    model, res = _ilp_objective(Graph.cycle(4), 2)
    assert res.stats["objective"] == 3
    for c in (1, 2, 3):
        g = Graph.complete_bipartite(2, c + 1)
        _, res = _ilp_objective(g, c)
        assert res.stats["objective"] == g.n - oracle(g, c)


def test_ilp_model_shape():
    g = Graph.cycle(5)
    model = build_ilp(g, 2)
    nd = neighborhood_partition(g).nd
    assert len(model.variables) == 3 * nd
    assert model.big_m == 26 > g.n ** 2
    assert set(model.binaries) == {f"xp_{i}" for i in range(nd)} | {f"xpp_{i}" for i in range(nd)}
    for i, members in enumerate(model.partition.classes):
        assert model.bounds[f"x_{i}"] == (0, len(members))
    names = [row.name for row in model.constraints]
    assert len(names) == len(set(names))
    # C5: each class is nonadjacent to two others -> 5 pair rows
    assert sum(name.startswith("pair_") for name in names) == 5


def test_ilp_indicator_rows_force_intended_values():
    model = build_ilp(Graph.complete_bipartite(2, 3), 2)
    for i in range(model.partition.nd):
        rows = model.class_rows[i]
        size = len(model.partition.classes[i])
        for x in range(size + 1):
            feasible = [(xp, xpp) for xp in (0, 1) for xpp in (0, 1)
                        if all(r.holds({f"x_{i}": x, f"xp_{i}": xp, f"xpp_{i}": xpp}) for r in rows)]
            assert feasible == [(int(x >= 1), int(x >= 2))]


def test_ilp_matches_oracle():
    rng = random.Random(9)
    graphs = list(random_graphs(100, range(2, 9), (0.3, 0.5, 0.7), seed=4))
    graphs += [random_twin_graph(rng.randint(2, 4), 3, seed=s) for s in range(50)]
    for g in graphs:
        for c in (1, 2, 3):
            _, res = _ilp_objective(g, c)
            assert res.stats["objective"] == g.n - oracle(g, c)
            assert len(res.solution) == g.n - res.stats["objective"]
            assert is_c_closed(delete_vertices(g, res.solution), c)


def test_ilp_guard_and_c_mismatch():
    g = Graph.empty(25)  # one independent class of size 25
    model = build_ilp(Graph.cycle(20), 2)
    with pytest.raises(ResourceLimitError):
        solve_ilp_tiny(model, Graph.cycle(20), 2, guard=1000)
    with pytest.raises(InputError):
        solve_ilp_tiny(build_ilp(g, 2), g, 3)


def test_lp_text():
    text = build_ilp(Graph.cycle(4), 2).to_lp()
    lines = text.splitlines()
    for section in ("Maximize", "Subject To", "Bounds", "General", "Binary", "End"):
        assert section in lines
    assert " obj: x_0 + x_1" in lines
    assert " same_0: 17 xpp_0 + x_1 <= 18" in lines
    assert "<" not in text.replace("<=", "")


# -- degree bounded ----------------------------------------------------------

def test_degree_examples():
    res = solve_degree_bounded(Graph.cycle(4), 2)
    assert res.size == 1
    assert solve_degree_bounded(Graph.cycle(5), 2).solution == frozenset()
    prism = Graph.complete_bipartite(3, 3)  # 6 vertices, 3-regular
    res = solve_degree_bounded(prism, 3)
    assert res.size == oracle(prism, 3)
    with pytest.raises(InputError):
        solve_degree_bounded(Graph.complete(5), 3)
    with pytest.raises(InputError):
        solve_degree_bounded(Graph.cycle(4), 1)


@pytest.mark.parametrize("c", [2, 3])
def test_degree_matches_oracle(c):
    for seed in range(150):
        g = random_degree_bounded(random.Random(seed).randint(4, 12), c, seed=seed)
        res = solve_degree_bounded(g, c)
        assert res.size == oracle(g, c)
        assert is_c_closed(delete_vertices(g, res.solution), c)
        h = rule1_noncritical_edge(g, c)
        assert max((len(cc) for cc in h.components()), default=0) <= (4 if c == 2 else 6)
        assert res.stats["max_component"] <= (4 if c == 2 else 6)
