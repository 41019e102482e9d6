"""Text formats for graphs, unit-interval instances, hitting-set instances and solutions.

All formats skip blank lines and lines starting with ``#``.

graph::

    n m
    u v        (m lines, 0-based, written with u < v)

intervals (unit length)::

    n
    id start   (n lines)

hitting set::

    universe_size num_sets d k
    e1 e2 ...  (one line per set)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import ParseError
from .graph import Graph
from .hitting_set import HittingSetInstance
from .solvers.interval import IntervalRepresentation


@dataclass
class InstanceFile:
    kind: str  # "graph", "interval" or "hittingset"
    payload: Any
    meta: dict | None = None

    def serialize(self) -> str:
        if self.kind == "graph":
            return serialize_graph(self.payload)
        if self.kind == "interval":
            return serialize_intervals(self.payload)
        if self.kind == "hittingset":
            return serialize_hitting_set(self.payload)
        raise ValueError(f"unknown instance kind {self.kind!r}")


def _data_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(tokens, lineno, expect=None):
    if expect is not None and len(tokens) != expect:
        raise ParseError(f"expected {expect} integers, got {len(tokens)}", lineno)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer token in {' '.join(tokens)!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    lines = _data_lines(text)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("missing 'n m' header") from None
    n, m = _ints(tokens, lineno, 2)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", lineno)
    seen = set()
    edges = []
    last = lineno
    for lineno, tokens in lines:
        last = lineno
        u, v = _ints(tokens, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}", last)
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _number(token, lineno):
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"non-numeric start {token!r}", lineno) from None
    return value


def _format_number(x) -> str:
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        d = x.denominator
        twos = fives = 0
        while d % 2 == 0:
            d //= 2
            twos += 1
        while d % 5 == 0:
            d //= 5
            fives += 1
        if d == 1:
            digits = max(twos, fives)
            scaled = x * 10**digits
            sign = "-" if scaled < 0 else ""
            whole = str(abs(scaled.numerator))
            whole = whole.rjust(digits + 1, "0")
            return f"{sign}{whole[:-digits]}.{whole[-digits:]}"
        return repr(float(x))
    return repr(x) if isinstance(x, float) else str(x)


def parse_intervals(text: str) -> IntervalRepresentation:
    lines = _data_lines(text)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("missing interval count") from None
    (n,) = _ints(tokens, lineno, 1)
    ids, starts = [], []
    seen = set()
    for lineno, tokens in lines:
        if len(tokens) != 2:
            raise ParseError("expected 'id start'", lineno)
        (vid,) = _ints(tokens[:1], lineno)
        if vid in seen:
            raise ParseError(f"duplicate interval id {vid}", lineno)
        seen.add(vid)
        ids.append(vid)
        starts.append(_number(tokens[1], lineno))
    if len(ids) != n:
        raise ParseError(f"header announces {n} intervals, found {len(ids)}")
    return IntervalRepresentation(starts, ids)


def serialize_intervals(rep: IntervalRepresentation) -> str:
    lines = [str(rep.n)]
    lines.extend(f"{rep.labels[v]} {_format_number(rep.starts[v])}" for v in rep.order)
    return "\n".join(lines) + "\n"


def parse_hitting_set(text: str) -> HittingSetInstance:
    lines = _data_lines(text)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("missing 'universe_size num_sets d k' header") from None
    size, count, d, k = _ints(tokens, lineno, 4)
    sets = []
    for lineno, tokens in lines:
        elems = _ints(tokens, lineno)
        if any(not 0 <= e < size for e in elems):
            raise ParseError(f"element id out of range 0..{size - 1}", lineno)
        if len(set(elems)) > d:
            raise ParseError(f"set larger than d={d}", lineno)
        sets.append(elems)
    if len(sets) != count:
        raise ParseError(f"header announces {count} sets, found {len(sets)}")
    try:
        return HittingSetInstance(size, tuple(sets), d, k)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize_hitting_set(hs: HittingSetInstance) -> str:
    lines = [f"{hs.universe_size} {len(hs.sets)} {hs.d} {hs.k}"]
    lines.extend(" ".join(map(str, s)) for s in hs.sets)
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> list[int]:
    out = []
    for lineno, tokens in _data_lines(text):
        out.extend(_ints(tokens, lineno))
    return out


def serialize_solution(vertices) -> str:
    return " ".join(map(str, sorted(vertices))) + "\n"
