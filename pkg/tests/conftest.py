import random
from itertools import combinations

import pytest

from cclosed import Graph


def naive_neighbors(g):
    return [set(g.neighbors(v)) for v in range(g.n)]


def naive_is_closed(g, c, removed=()):
    """Set-based closure test, independent of the bitset code paths."""
    nb = naive_neighbors(g)
    alive = [v for v in range(g.n) if v not in set(removed)]
    for u, v in combinations(alive, 2):
        if v in nb[u]:
            continue
        common = (nb[u] & nb[v]) - set(removed)
        if len(common) >= c:
            return False
    return True


def naive_min_deletion(g, c):
    for size in range(g.n + 1):
        for s in combinations(range(g.n), size):
            if naive_is_closed(g, c, s):
                return size
    raise AssertionError("unreachable")


def random_graphs(count, n_range, p_values, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.choice(n_range)
        p = rng.choice(p_values)
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        yield Graph.from_edges(n, edges)


@pytest.fixture
def c4():
    return Graph.cycle(4)


# filled by the acceptance suite, echoed at the end of every run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
