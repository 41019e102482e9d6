"""Neighborhood-diversity algorithms: class partition, profile branching and the ILP."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod

from ..errors import InputError, ResourceLimitError, UnsupportedError
from ..graph import Graph, SolveResult, closed_within

ND_PROFILE_GUARD = 10**7
ILP_ENUM_GUARD = 10**6

CLIQUE = "clique"
INDEPENDENT = "independent"


@dataclass
class NeighborhoodPartition:
    classes: list  # sorted tuples of vertex ids
    kinds: list  # CLIQUE or INDEPENDENT per class
    class_of: list  # vertex -> class index

    @property
    def nd(self) -> int:
        return len(self.classes)


def neighborhood_partition(g: Graph) -> NeighborhoodPartition:
    """Twin classes: u ~ v iff N(u) - {v} == N(v) - {u}.

    False twins share the open neighborhood, true twins the closed one; a
    vertex cannot have both kinds of twins, so grouping by each key and
    taking the nontrivial groups yields the partition.
    """
    n = g.n
    by_open: dict[int, list] = {}
    by_closed: dict[int, list] = {}
    for v in range(n):
        by_open.setdefault(g.adj[v], []).append(v)
        by_closed.setdefault(g.adj[v] | 1 << v, []).append(v)
    class_of = [-1] * n
    groups = []
    for members in by_open.values():
        if len(members) > 1:
            groups.append((members, INDEPENDENT))
    for members in by_closed.values():
        if len(members) > 1:
            groups.append((members, CLIQUE))
    for v in range(n):
        if len(by_open[g.adj[v]]) == 1 and len(by_closed[g.adj[v] | 1 << v]) == 1:
            groups.append(([v], INDEPENDENT))
    groups.sort(key=lambda t: t[0][0])
    classes, kinds = [], []
    for i, (members, kind) in enumerate(groups):
        classes.append(tuple(members))
        kinds.append(kind)
        for v in members:
            class_of[v] = i
    return NeighborhoodPartition(classes, kinds, class_of)


def _retain_options(size, c):
    opts = set(range(min(c - 1, size) + 1))
    opts.add(size)
    return sorted(opts, reverse=True)


def _deletion_for(classes, retained):
    out = []
    for members, r in zip(classes, retained):
        out.extend(members[r:])  # drop the highest ids
    return out


def solve_nd_branching(g: Graph, c: int, k: int | None = None,
                       guard: int = ND_PROFILE_GUARD) -> SolveResult:
    """Try retained-count profiles per twin class, in order of total deletions.

    Each class either stays whole or keeps fewer than c vertices, so at most
    (c+1)^nd profiles exist; the first closed profile found is minimum.
    """
    if c < 2:
        raise UnsupportedError("the class-profile argument needs c >= 2")
    if k is None:
        k = g.n
    part = neighborhood_partition(g)
    sizes = [len(m) for m in part.classes]
    options = [_retain_options(s, c) for s in sizes]
    space = prod(len(o) for o in options)
    if space > guard:
        raise ResourceLimitError(f"{space} class profiles exceed the guard {guard}")
    costs = [[s - r for r in opts] for s, opts in zip(sizes, options)]
    # min achievable cost of the suffix starting at class i
    suffix_min = [0] * (len(sizes) + 1)
    for i in range(len(sizes) - 1, -1, -1):
        suffix_min[i] = suffix_min[i + 1] + min(costs[i])
    stats = {"nd": part.nd, "profiles": 0, "profile_space": space}
    full = g.full_mask

    def profiles(i, remaining, chosen):
        if i == len(sizes):
            if remaining == 0:
                yield list(chosen)
            return
        for r, cost in zip(options[i], costs[i]):
            rest = remaining - cost
            if rest < suffix_min[i + 1]:
                continue
            chosen.append(r)
            yield from profiles(i + 1, rest, chosen)
            chosen.pop()

    for budget in range(min(k, g.n) + 1):
        for retained in profiles(0, budget, []):
            stats["profiles"] += 1
            s = _deletion_for(part.classes, retained)
            alive = full
            for v in s:
                alive &= ~(1 << v)
            if closed_within(g.adj, alive, c):
                return SolveResult(frozenset(s), True, stats)
    return SolveResult(None, False, stats, lower_bound=k + 1)


@dataclass
class Constraint:
    name: str
    coeffs: dict  # variable name -> integer coefficient
    sense: str  # "<=", ">=" or "="
    rhs: int

    def holds(self, values) -> bool:
        lhs = sum(a * values[v] for v, a in self.coeffs.items())
        if self.sense == "<=":
            return lhs <= self.rhs
        if self.sense == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass
class IlpModel:
    partition: NeighborhoodPartition
    c: int
    big_m: int
    objective: dict  # maximized
    constraints: list
    bounds: dict  # variable -> (lo, hi)
    binaries: list
    generals: list
    class_rows: list = field(default_factory=list)  # per class, its indicator rows

    @property
    def variables(self) -> list:
        return self.generals + self.binaries

    def to_lp(self) -> str:
        return write_lp(self)


def _x(i):
    return f"x_{i}"


def _xp(i):
    return f"xp_{i}"


def _xpp(i):
    return f"xpp_{i}"


def build_ilp(g: Graph, c: int) -> IlpModel:
    """Integer program over retained counts per twin class.

    Strict inequalities are written as ``<= rhs - 1``.  Rows for nonadjacent
    vertex pairs are identical for all pairs drawn from the same two classes,
    so one row per class pair is emitted.  ``xpp_i`` is tied to ``x_i >= 2``
    by ``M*xpp_i >= x_i - 1`` and ``x_i >= 2*xpp_i``.
    """
    if c < 1:
        raise InputError(f"c must be >= 1, got {c}")
    part = neighborhood_partition(g)
    n = g.n
    big_m = n * n + 1
    nd = part.nd
    class_mask = []
    for members in part.classes:
        m = 0
        for v in members:
            m |= 1 << v
        class_mask.append(m)
    # NC: classes adjacent to a (any) member of class i
    nc = []
    for i, members in enumerate(part.classes):
        rep = members[0]
        nc.append({j for j in range(nd) if g.adj[rep] & class_mask[j]})

    objective = {_x(i): 1 for i in range(nd)}
    bounds = {}
    constraints = []
    class_rows = []
    for i, members in enumerate(part.classes):
        bounds[_x(i)] = (0, len(members))
        rows = [
            Constraint(f"on_{i}", {_xp(i): big_m, _x(i): -1}, ">=", 0),
            Constraint(f"off_{i}", {_x(i): 1, _xp(i): -1}, ">=", 0),
            Constraint(f"many_{i}", {_xpp(i): big_m, _x(i): -1}, ">=", -1),
            Constraint(f"two_{i}", {_x(i): 1, _xpp(i): -2}, ">=", 0),
        ]
        class_rows.append(rows)
        constraints.extend(rows)
    for i in range(nd):
        for j in range(i + 1, nd):
            if j in nc[i]:
                continue
            coeffs = {_xp(i): big_m, _xp(j): big_m}
            for d in sorted(nc[i] & nc[j]):
                coeffs[_x(d)] = coeffs.get(_x(d), 0) + 1
            constraints.append(Constraint(f"pair_{i}_{j}", coeffs, "<=", 2 * big_m + c - 1))
    for i, kind in enumerate(part.kinds):
        if kind != INDEPENDENT:
            continue
        coeffs = {_xpp(i): big_m}
        for d in sorted(nc[i]):
            coeffs[_x(d)] = coeffs.get(_x(d), 0) + 1
        constraints.append(Constraint(f"same_{i}", coeffs, "<=", big_m + c - 1))
    binaries = [_xp(i) for i in range(nd)] + [_xpp(i) for i in range(nd)]
    for b in binaries:
        bounds[b] = (0, 1)
    return IlpModel(part, c, big_m, objective, constraints, bounds,
                    binaries, [_x(i) for i in range(nd)], class_rows)


def _term(coef, var, first):
    if coef == 1:
        body = var
    elif coef == -1:
        body = f"- {var}"
        return body if first else f" {body}"
    else:
        body = f"{abs(coef)} {var}"
        if coef < 0:
            return f"- {body}" if first else f" - {body}"
    return body if first else f" + {body}"


def _linear(coeffs):
    parts = []
    for var, coef in coeffs.items():
        if coef:
            parts.append(_term(coef, var, not parts))
    return "".join(parts) if parts else "0"


def write_lp(model: IlpModel) -> str:
    """CPLEX LP text for ``model``."""
    lines = ["\\ c-closed vertex deletion, retained vertices per twin class",
             f"\\ c = {model.c}, M = {model.big_m}", "Maximize", f" obj: {_linear(model.objective)}",
             "Subject To"]
    for row in model.constraints:
        lines.append(f" {row.name}: {_linear(row.coeffs)} {row.sense} {row.rhs}")
    lines.append("Bounds")
    for var in model.generals:
        lo, hi = model.bounds[var]
        lines.append(f" {lo} <= {var} <= {hi}")
    lines.append("General")
    lines.extend(f" {v}" for v in model.generals)
    lines.append("Binary")
    lines.extend(f" {v}" for v in model.binaries)
    lines.append("End")
    return "\n".join(lines) + "\n"


def solve_ilp_tiny(model: IlpModel, g: Graph, c: int | None = None,
                   guard: int = ILP_ENUM_GUARD) -> SolveResult:
    """Exhaustive search over the count variables of ``model``.

    For each count vector the indicator variables take the smallest values
    their class rows allow (larger values only tighten the pair rows).
    """
    if c is not None and c != model.c:
        raise InputError(f"model was built for c={model.c}, not c={c}")
    part = model.partition
    sizes = [len(m) for m in part.classes]
    space = prod(s + 1 for s in sizes)
    if space > guard:
        raise ResourceLimitError(
            f"{space} count vectors exceed the guard {guard}; export the LP file instead")
    nd = len(sizes)
    local = {f"on_{i}" for i in range(nd)} | {f"off_{i}" for i in range(nd)} \
        | {f"many_{i}" for i in range(nd)} | {f"two_{i}" for i in range(nd)}
    coupling = [row for row in model.constraints if row.name not in local]
    # smallest feasible (xp, xpp) per class and count value
    indicator = []
    for i, s in enumerate(sizes):
        table = []
        for x in range(s + 1):
            choice = None
            for xp, xpp in ((0, 0), (0, 1), (1, 0), (1, 1)):
                vals = {_x(i): x, _xp(i): xp, _xpp(i): xpp}
                if all(row.holds(vals) for row in model.class_rows[i]):
                    choice = (xp, xpp)
                    break
            table.append(choice)
        indicator.append(table)
    best, best_x = -1, None
    enumerated = 0
    for xs in product(*(range(s + 1) for s in sizes)):
        enumerated += 1
        values = {}
        ok = True
        for i, x in enumerate(xs):
            choice = indicator[i][x]
            if choice is None:
                ok = False
                break
            values[_x(i)] = x
            values[_xp(i)], values[_xpp(i)] = choice
        if not ok or not all(row.holds(values) for row in coupling):
            continue
        obj = sum(a * values[v] for v, a in model.objective.items())
        if obj > best:
            best, best_x = obj, xs
    stats = {"assignments": enumerated, "objective": best}
    if best_x is None:
        return SolveResult(None, False, stats)
    return SolveResult(frozenset(_deletion_for(part.classes, best_x)), True, stats)
