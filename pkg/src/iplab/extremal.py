"""Extremal families ``U_p`` and ``G(k, p)`` with their colouring certificates.

``U_p`` is the ordered outerplanar graph on ``2^p + 1`` vertices obtained by
repeatedly gluing a copy to itself and joining the extremities.  ``G(k, p)``
glues copies of ``G(k, p-1)`` and wires their shared endpoints together with a
copy of ``G(k-1, p)`` plus two stars; it is ``(2k+1)``-non-crossing and has no
long induced path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .core import Edge, OrderedGraph
from .noncross import EdgeColoring

MAX_U_P = 24
MAX_EXPONENT = 30


@dataclass(frozen=True)
class LabeledInstance:
    graph: OrderedGraph
    coloring: EdgeColoring
    family: str  # "U" or "G"
    k: int
    p: int
    x_set: tuple[int, ...] = field(default=())

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def name(self) -> str:
        return f"U_{self.p}" if self.family == "U" else f"G({self.k},{self.p})"

    @property
    def copies(self) -> list[tuple[int, int]]:
        """Extremity pairs ``(c_i, c_{i+1})`` of the glued copies, empty for base cases."""
        return list(zip(self.x_set, self.x_set[1:]))

    def upper_bound(self) -> int:
        return ip_upper_bound(self.family, self.k, self.p)


def glue(A: OrderedGraph, B: OrderedGraph) -> OrderedGraph:
    """``A`` followed by ``B``, sharing ``A``'s last vertex with ``B``'s first."""
    if A.n < 1 or B.n < 1:
        raise ValueError("gluing needs non-empty graphs")
    off = A.n - 1
    return OrderedGraph(A.n + B.n - 1, [*A.edges, *((u + off, v + off) for u, v in B.edges)])


def _u_edges(p: int) -> list[Edge]:
    edges: list[Edge] = [(1, 2)]
    for q in range(p):
        half = 1 << q
        edges = edges + [(u + half, v + half) for u, v in edges]
        edges.append((1, 2 * half + 1))
    return edges


def build_u(p: int) -> LabeledInstance:
    if p < 0:
        raise ValueError("p must be non-negative")
    if p > MAX_U_P:
        raise ValueError(f"U_{p} exceeds the size guard (p <= {MAX_U_P})")
    edges = _u_edges(p)
    G = OrderedGraph((1 << p) + 1, edges)
    assert G.n == (1 << p) + 1
    return LabeledInstance(G, EdgeColoring(1, dict.fromkeys(G.edges, 1)), "U", 0, p)


def expected_size(k: int, p: int) -> int:
    """``2^C(k+p+1, p) + 1``."""
    e = comb(k + p + 1, p)
    if e > MAX_EXPONENT:
        raise OverflowError(f"G({k},{p}) would have 2^{e}+1 vertices")
    return (1 << e) + 1


@dataclass
class _Raw:
    n: int
    edges: list[Edge]
    colors: list[int]
    x_set: tuple[int, ...] = ()


def _raw_g(k: int, p: int, memo: dict[tuple[int, int], _Raw]) -> _Raw:
    if (k, p) in memo:
        return memo[(k, p)]
    if p == 0:
        raw = _Raw(3, [(1, 2), (2, 3)], [1, 1])
    elif k == 0:
        edges = _u_edges(p + 1)
        raw = _Raw((1 << (p + 1)) + 1, edges, [1] * len(edges))
    else:
        inner = _raw_g(k, p - 1, memo)
        top = _raw_g(k - 1, p, memo)
        d = top.n - 1
        step = inner.n - 1
        xs = tuple(1 + i * step for i in range(d + 1))
        edges: list[Edge] = []
        colors: list[int] = []
        for i in range(d):
            off = i * step
            edges.extend((u + off, v + off) for u, v in inner.edges)
            colors.extend(inner.colors)
        # only the extremity edge of a copy can coincide with an added edge
        present = set()
        if (1, inner.n) in set(inner.edges):
            present = {(xs[i], xs[i + 1]) for i in range(d)}
        added: dict[Edge, int] = {}
        for (a, b), c in zip(top.edges, top.colors):
            added.setdefault((xs[a - 1], xs[b - 1]), c)
        first, last = xs[0], xs[-1]
        for ci in xs[1:-1]:
            added.setdefault((first, ci), 2 * k)
        for ci in xs[1:-1]:
            added.setdefault((ci, last), 2 * k + 1)
        for e, c in added.items():
            if e not in present:
                edges.append(e)
                colors.append(c)
        raw = _Raw(1 + d * step, edges, colors, xs)
    memo[(k, p)] = raw
    return raw


def build_g(k: int, p: int) -> LabeledInstance:
    if k < 0 or p < 0:
        raise ValueError("k and p must be non-negative")
    n = expected_size(k, p)  # size guard
    raw = _raw_g(k, p, {})
    assert raw.n == n, (raw.n, n)
    G = OrderedGraph(raw.n, raw.edges)
    coloring = EdgeColoring(2 * k + 1, dict(zip(raw.edges, raw.colors)))
    return LabeledInstance(G, coloring, "G", k, p, raw.x_set)


def ip_upper_bound(family: str, k: int, p: int) -> int:
    """Largest induced-path size the family's lemma still permits."""
    if family == "U":
        return 2 * p + 2
    if family != "G":
        raise ValueError(f"unknown family {family!r}")
    if k == 0:
        return 2 * (p + 1) + 2
    return 2 * k * (p + 2) + 2
