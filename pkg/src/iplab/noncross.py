"""Non-crossing edge partitions for a fixed vertex order.

For a fixed order, splitting the edges into ``k`` non-crossing classes is the
same as properly ``k``-colouring the *conflict graph* whose nodes are the edges
and whose arcs are the crossing pairs.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .core import Edge, OrderedGraph, crossing_pairs, is_non_crossing
from .errors import NotTwoPartitionable

EXACT, GREEDY = "exact", "greedy"
DEFAULT_EXACT_THRESHOLD = 64


@dataclass(frozen=True)
class EdgeColoring:
    """Assignment of a colour in ``1..k`` to each edge."""

    k: int
    color: Mapping[Edge, int] = field(hash=False)

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be positive")

    def __getitem__(self, e: Edge) -> int:
        a, b = e
        return self.color[(a, b) if a < b else (b, a)]

    def __len__(self) -> int:
        return len(self.color)

    def classes(self) -> dict[int, list[Edge]]:
        out: dict[int, list[Edge]] = {}
        for e, c in self.color.items():
            out.setdefault(c, []).append(e)
        return out

    def used_colors(self) -> set[int]:
        return set(self.color.values())

    def shift(self, offset: int) -> EdgeColoring:
        return EdgeColoring(
            self.k, {(a + offset, b + offset): c for (a, b), c in self.color.items()}
        )

    def restrict(self, lo: int, hi: int) -> EdgeColoring:
        """Colouring of the ordered subgraph on ``[lo, hi]``, re-indexed from 1."""
        off = lo - 1
        return EdgeColoring(
            self.k,
            {
                (a - off, b - off): c
                for (a, b), c in self.color.items()
                if lo <= a and b <= hi
            },
        )

    @classmethod
    def uniform(cls, G: OrderedGraph, k: int = 1) -> EdgeColoring:
        return cls(k, dict.fromkeys(G.edges, 1))


@dataclass
class ConflictGraph:
    nodes: list[Edge]
    arcs: list[tuple[Edge, Edge]]
    adj: dict[Edge, list[Edge]]

    def degree(self, e: Edge) -> int:
        return len(self.adj[e])


def build_conflict_graph(G: OrderedGraph, edges: Iterable[Edge] | None = None) -> ConflictGraph:
    nodes = list(G.edges if edges is None else sorted(edges))
    arcs = crossing_pairs(None, nodes)
    adj: dict[Edge, list[Edge]] = {e: [] for e in nodes}
    for e, f in arcs:
        adj[e].append(f)
        adj[f].append(e)
    return ConflictGraph(nodes, arcs, adj)


def _odd_cycle(parent: dict[Edge, Edge | None], x: Edge, y: Edge) -> list[Edge]:
    """Cycle closed by the arc ``x-y`` between two same-coloured BFS nodes."""
    px = [x]
    while parent[px[-1]] is not None:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] is not None:
        py.append(parent[py[-1]])
    on_x = {e: i for i, e in enumerate(px)}
    j = 0
    while py[j] not in on_x:
        j += 1
    i = on_x[py[j]]
    return px[: i + 1] + py[:j][::-1]


def two_partition(G: OrderedGraph) -> EdgeColoring | None:
    """Split the edges into two non-crossing classes, or ``None``.

    Breadth-first 2-colouring of each conflict component, starting every
    component with colour 1.  Use :func:`two_partition_or_raise` to get the
    odd crossing cycle that rules a partition out.
    """
    try:
        return two_partition_or_raise(G)
    except NotTwoPartitionable:
        return None


def two_partition_or_raise(G: OrderedGraph) -> EdgeColoring:
    cg = build_conflict_graph(G)
    color: dict[Edge, int] = {}
    parent: dict[Edge, Edge | None] = {}
    for start in cg.nodes:
        if start in color:
            continue
        color[start] = 1
        parent[start] = None
        queue = deque([start])
        while queue:
            e = queue.popleft()
            for f in cg.adj[e]:
                if f not in color:
                    color[f] = 3 - color[e]
                    parent[f] = e
                    queue.append(f)
                elif color[f] == color[e]:
                    raise NotTwoPartitionable(_odd_cycle(parent, e, f))
    return EdgeColoring(2, color)


def _exact_color(cg: ConflictGraph, nodes: list[Edge], k: int) -> dict[Edge, int] | None:
    """Backtracking (DSATUR order) proper ``k``-colouring of one component."""
    color: dict[Edge, int] = {}
    sat: dict[Edge, dict[int, int]] = {e: {} for e in nodes}

    def pick() -> Edge:
        return max(
            (e for e in nodes if e not in color),
            key=lambda e: (len(sat[e]), cg.degree(e), -nodes.index(e)),
        )

    def assign(e: Edge, c: int, delta: int) -> None:
        for f in cg.adj[e]:
            s = sat[f]
            s[c] = s.get(c, 0) + delta
            if not s[c]:
                del s[c]

    def solve(max_used: int) -> bool:
        if len(color) == len(nodes):
            return True
        e = pick()
        for c in range(1, min(k, max_used + 1) + 1):
            if c in sat[e]:
                continue
            color[e] = c
            assign(e, c, 1)
            if solve(max(max_used, c)):
                return True
            assign(e, c, -1)
            del color[e]
        return False

    return dict(color) if solve(0) else None


def k_partition(
    G: OrderedGraph, k: int, exact_threshold: int = DEFAULT_EXACT_THRESHOLD
) -> tuple[EdgeColoring | None, str]:
    """Partition the edges into ``k`` non-crossing classes.

    Returns ``(colouring or None, method)``.  With ``method == "exact"`` a
    ``None`` proves that no partition exists; a greedy ``None`` proves nothing.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    cg = build_conflict_graph(G)
    color: dict[Edge, int] = {e: 1 for e in cg.nodes if not cg.adj[e]}
    busy = [e for e in cg.nodes if cg.adj[e]]
    if len(busy) <= exact_threshold:
        seen: set[Edge] = set()
        for start in busy:
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            for e in comp:
                for f in cg.adj[e]:
                    if f not in seen:
                        seen.add(f)
                        comp.append(f)
            comp.sort()
            sub = _exact_color(cg, comp, k)
            if sub is None:
                return None, EXACT
            color.update(sub)
        return EdgeColoring(k, color), EXACT
    # long edges constrain most: colour them first
    for e in sorted(busy, key=lambda e: (e[0] - e[1], e[0])):
        taken = {color[f] for f in cg.adj[e] if f in color}
        c = next((c for c in range(1, k + 1) if c not in taken), None)
        if c is None:
            return None, GREEDY
        color[e] = c
    return EdgeColoring(k, color), GREEDY


def verify_partition(G: OrderedGraph, c: EdgeColoring) -> bool:
    """Every edge coloured in ``1..k``, nothing else coloured, every class non-crossing."""
    if len(c.color) != G.m:
        return False
    classes: dict[int, list[Edge]] = {}
    has_edge = G.has_edge
    for e, col in c.color.items():
        if not 1 <= col <= c.k or e[0] > e[1] or not has_edge(*e):
            return False
        classes.setdefault(col, []).append(e)
    return all(is_non_crossing(F, normalized=True) for F in classes.values())


def crossing_violations(G: OrderedGraph, c: EdgeColoring) -> list[tuple[Edge, Edge]]:
    """Crossing pairs that share a colour class (for diagnostics)."""
    out: list[tuple[Edge, Edge]] = []
    for F in c.classes().values():
        out.extend(crossing_pairs(None, F))
    return sorted(out)
