from fractions import Fraction

import pytest

from cclosed import InputError, brute_force_min_deletion, is_c_closed
from cclosed.generators import random_interval
from cclosed.graph import Graph, delete_vertices
from cclosed.solvers.interval import (
    IntervalRepresentation,
    solve_unit_interval,
    verify_fsg_window_structure,
)


def test_single_window_example():
    rep = IntervalRepresentation([0, 0.5, 0.75, 0.875, 1.25])
    res = solve_unit_interval(rep, 3)
    assert res.solution == frozenset({4})
    assert res.stats["windows"] == 1
    assert brute_force_min_deletion(rep.to_graph(), 3).size == 1


def test_small_examples():
    rep = IntervalRepresentation([0, 2, 4, 6])
    assert rep.to_graph() == Graph.empty(4)
    assert solve_unit_interval(rep, 2).solution == frozenset()
    # closed intervals: [0, 1] and [1, 2] share the point 1
    assert IntervalRepresentation([0, 0.5, 1.0]).to_graph() == Graph.complete(3)
    rep = IntervalRepresentation([0, 0.5, 1.125])
    assert rep.to_graph() == Graph.path(3)
    assert solve_unit_interval(rep, 1).size == 1


def test_exact_rational_starts():
    thirds = [Fraction(i, 3) for i in range(7)]
    rep = IntervalRepresentation(thirds)
    assert rep.depth() == 4
    res = solve_unit_interval(rep, 3)
    assert res.size == brute_force_min_deletion(rep.to_graph(), 3).size


def test_depth_limit():
    rep = IntervalRepresentation([0, 0.1, 0.2, 0.3])
    assert rep.depth() == 4
    with pytest.raises(InputError):
        solve_unit_interval(rep, 2)
    with pytest.raises(InputError):
        verify_fsg_window_structure(rep, 2)


def test_ties_broken_by_id():
    rep = IntervalRepresentation([1, 0, 1, 0])
    assert rep.order == [1, 3, 0, 2]


@pytest.mark.parametrize("c", [1, 2, 3, 4])
def test_matches_oracle(c):
    for seed in range(120):
        rep = random_interval(3 + seed % 12, c, seed=seed)
        assert rep.depth() <= c + 1
        g = rep.to_graph()
        res = solve_unit_interval(rep, c)
        assert res.size == brute_force_min_deletion(g, c).size
        assert is_c_closed(delete_vertices(g, res.solution), c)
        assert verify_fsg_window_structure(rep, c)
