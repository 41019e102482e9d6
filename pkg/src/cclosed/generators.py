"""Instance generators: random families, structural families and hardness gadgets."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .errors import InputError
from .graph import Graph
from .hitting_set import HittingSetInstance
from .io import InstanceFile
from .reductions import reduce_hittingset_to_ccvd
from .solvers.interval import IntervalRepresentation


def random_graph(n: int, p: float, seed=None) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def fsg(c: int, mask: int = 0) -> Graph:
    """Forbidden subgraph for ``c``: bad pair 0, 1 and connectors 2..c+1.

    Bit ``i`` of ``mask`` adds the i-th connector pair (lexicographic order)
    as an optional edge.
    """
    if c < 1:
        raise InputError("c must be >= 1")
    conn = list(range(2, c + 2))
    optional = list(combinations(conn, 2))
    if mask < 0 or mask >> len(optional):
        raise InputError(f"mask must be in 0..{2 ** len(optional) - 1}")
    edges = [(b, w) for b in (0, 1) for w in conn]
    edges += [e for i, e in enumerate(optional) if mask >> i & 1]
    return Graph.from_edges(c + 2, edges)


def clique_pendants(s: int) -> Graph:
    """Clique on 0..2s-1; vertex 2s sees the first half, 2s+1 the second half."""
    if s < 1:
        raise InputError("s must be >= 1")
    edges = list(combinations(range(2 * s), 2))
    edges += [(2 * s, i) for i in range(s)]
    edges += [(2 * s + 1, i) for i in range(s, 2 * s)]
    return Graph.from_edges(2 * s + 2, edges)


def indep_components(s: int, c: int) -> Graph:
    """``s`` disjoint copies of K_{2,c}: two hubs joined to an independent set of size c."""
    if s < 0 or c < 1:
        raise InputError("need s >= 0 and c >= 1")
    edges = []
    size = c + 2
    for i in range(s):
        base = i * size
        for w in range(2, size):
            edges.append((base, base + w))
            edges.append((base + 1, base + w))
    return Graph.from_edges(s * size, edges)


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def split_partition(g: Graph):
    """``(clique, independent)`` vertex lists if ``g`` is a split graph, else ``None``.

    Degree-sequence test: with degrees sorted descending, g is split iff
    sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i where m is the largest i with
    d_i >= i - 1.
    """
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    deg = [g.degree(v) for v in order]
    m = 0
    for i, d in enumerate(deg, 1):
        if d >= i - 1:
            m = i
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    return sorted(order[:m]), sorted(order[m:])


def distance_at_least(g: Graph, vertices, dist: int) -> bool:
    """True iff the given vertices are pairwise at distance >= dist."""
    targets = set(vertices)
    for s in vertices:
        seen = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if seen[v] + 1 >= dist:
                continue
            for u in g.neighbors(v):
                if u not in seen:
                    seen[u] = seen[v] + 1
                    if u in targets:
                        return False
                    queue.append(u)
    return True


def vc_maxdeg6(vc: Graph, c: int) -> Graph:
    """Replace every edge of a max-degree-3 Vertex Cover instance by an FSG.

    Per edge e two bad-pair vertices are joined to both endpoints of e and
    to c-2 fresh connectors.  Ids: original vertices first, then per edge
    ``b1, b2, w_1..w_{c-2}``.
    """
    if c < 2:
        raise InputError("c must be >= 2")
    if vc.max_degree > 3:
        raise InputError("vertex cover instance must have max degree <= 3")
    n = vc.n
    edges = []
    for a, b in vc.edges():
        b1, b2 = n, n + 1
        conn = [a, b] + list(range(n + 2, n + c))
        for w in conn:
            edges.append((b1, w))
            edges.append((b2, w))
        n += c
    return Graph.from_edges(n, edges)


def vc_maxdeg45(vc: Graph, c: int) -> Graph:
    """Gadget for (c, max degree) = (2, 4) and (3, 5).

    Edges between two vertices of degree <= 2 get the ordinary FSG gadget.
    Around each degree-3 vertex v with neighbors u_1..u_3 the edges vu_i are
    replaced by paths v - s_i - u_i, plus c - 1 vertices x_j adjacent to
    v, u_1, u_2, u_3 (and to each other when c = 3).
    """
    if c not in (2, 3):
        raise InputError("this gadget is defined for c = 2 and c = 3")
    if vc.max_degree > 3:
        raise InputError("vertex cover instance must have max degree <= 3")
    heavy = [v for v in range(vc.n) if vc.degree(v) == 3]
    if not distance_at_least(vc, heavy, 3):
        raise InputError("degree-3 vertices must be pairwise at distance >= 3")
    n = vc.n
    edges = []
    for a, b in vc.edges():
        if vc.degree(a) == 3 or vc.degree(b) == 3:
            continue
        b1, b2 = n, n + 1
        for w in [a, b] + list(range(n + 2, n + c)):
            edges.append((b1, w))
            edges.append((b2, w))
        n += c
    for v in heavy:
        us = vc.neighbors(v)
        for u in us:
            edges.append((v, n))
            edges.append((n, u))
            n += 1
        xs = list(range(n, n + c - 1))
        n += c - 1
        for x in xs:
            for t in (v, *us):
                edges.append((x, t))
        edges.extend(combinations(xs, 2))
    return Graph.from_edges(n, edges)


def random_vc_instance(n: int, seed=None, spread_degree3: bool = False, tries: int = 10000) -> Graph:
    """Random graph with max degree exactly 3 (needs n >= 4).

    With ``spread_degree3`` the degree-3 vertices are pairwise at distance >= 3.
    """
    if n < 4:
        raise InputError("need n >= 4 for a vertex of degree 3")
    rng = random.Random(seed)
    for _ in range(tries):
        deg = [0] * n
        edges = set()
        pairs = list(combinations(range(n), 2))
        rng.shuffle(pairs)
        target = rng.randint(n - 1, 3 * n // 2)
        for u, v in pairs:
            if len(edges) >= target:
                break
            if deg[u] < 3 and deg[v] < 3:
                edges.add((u, v))
                deg[u] += 1
                deg[v] += 1
        if max(deg) != 3:
            continue
        g = Graph.from_edges(n, sorted(edges))
        if spread_degree3:
            heavy = [v for v in range(n) if deg[v] == 3]
            if not distance_at_least(g, heavy, 3):
                continue
        return g
    raise InputError("could not sample a matching vertex cover instance")


def random_degree_bounded(n: int, delta: int, seed=None, attempts: int | None = None) -> Graph:
    """Random process: propose random pairs, keep those that respect max degree ``delta``."""
    rng = random.Random(seed)
    if attempts is None:
        attempts = rng.randint(n // 2, 2 * n)
    deg = [0] * n
    edges = set()
    for _ in range(attempts):
        u, v = rng.sample(range(n), 2)
        e = (min(u, v), max(u, v))
        if e in edges or deg[u] >= delta or deg[v] >= delta:
            continue
        edges.add(e)
        deg[u] += 1
        deg[v] += 1
    return Graph.from_edges(n, sorted(edges))


def random_twin_graph(classes: int, max_size: int, seed=None, p: float = 0.5) -> Graph:
    """Blow-up of a random quotient graph: few twin classes, each a clique or independent set."""
    rng = random.Random(seed)
    sizes = [rng.randint(1, max_size) for _ in range(classes)]
    kinds = [rng.random() < 0.5 for _ in range(classes)]
    starts = [sum(sizes[:i]) for i in range(classes)]
    members = [list(range(s, s + z)) for s, z in zip(starts, sizes)]
    edges = []
    for i in range(classes):
        if kinds[i]:
            edges.extend(combinations(members[i], 2))
        for j in range(i + 1, classes):
            if rng.random() < p:
                edges.extend((a, b) for a in members[i] for b in members[j])
    return Graph.from_edges(sum(sizes), edges)


def random_interval(n: int, c: int, seed=None, step: float = 0.125, max_gap: int = 10) -> IntervalRepresentation:
    """Unit intervals with starts on a ``step`` grid and depth at most c + 1."""
    rng = random.Random(seed)
    starts = []
    for _ in range(n):
        x = starts[-1] + step * rng.randint(0, max_gap) if starts else 0.0
        if len(starts) >= c + 1:
            # keep at most c earlier intervals alive at x
            x = max(x, starts[-(c + 1)] + 1 + step)
        starts.append(x)
    labels = list(range(n))
    rng.shuffle(labels)
    # shuffle which vertex id gets which interval
    by_vertex = [0.0] * n
    for pos, v in enumerate(labels):
        by_vertex[v] = starts[pos]
    return IntervalRepresentation(by_vertex)


SMALL_VERTEX_COVER = Graph.from_edges(4, [(0, 1), (0, 3), (1, 2), (1, 3)])


@dataclass
class GeneratorSpec:
    family: str
    params: dict = field(default_factory=dict)


FAMILIES = (
    "random", "random-interval", "fsg", "clique-pendants", "indep-components",
    "vc-maxdeg6", "vc-maxdeg45", "hs-split", "random-vc",
)


def generate(spec: GeneratorSpec) -> InstanceFile:
    try:
        return _generate(spec.family, dict(spec.params))
    except KeyError as exc:
        raise InputError(f"family {spec.family!r} needs parameter {exc.args[0]!r}") from None


def _generate(f, p):
    if f == "random":
        return InstanceFile("graph", random_graph(p["n"], p.get("p", 0.5), p.get("seed")))
    if f == "random-interval":
        return InstanceFile("interval", random_interval(p["n"], p["c"], p.get("seed")))
    if f == "fsg":
        return InstanceFile("graph", fsg(p["c"], p.get("mask", 0)))
    if f == "clique-pendants":
        return InstanceFile("graph", clique_pendants(p["s"]))
    if f == "indep-components":
        return InstanceFile("graph", indep_components(p["s"], p["c"]))
    if f == "random-vc":
        return InstanceFile("graph", random_vc_instance(p["n"], p.get("seed"), p.get("spread", False)))
    if f in ("vc-maxdeg6", "vc-maxdeg45"):
        vc = p.get("vc")
        if vc is None:
            vc = random_vc_instance(p.get("n", 6), p.get("seed"), f == "vc-maxdeg45")
        build = vc_maxdeg6 if f == "vc-maxdeg6" else vc_maxdeg45
        return InstanceFile("graph", build(vc, p["c"]), {"k": p.get("k")})
    if f == "hs-split":
        hs = p["hs"]
        if not isinstance(hs, HittingSetInstance):
            raise InputError("hs-split needs a HittingSetInstance")
        g, c, k = reduce_hittingset_to_ccvd(hs)
        return InstanceFile("graph", g, {"c": c, "k": k})
    raise InputError(f"unknown family {f!r}; choose from {', '.join(FAMILIES)}")
