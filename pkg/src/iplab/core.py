"""Ordered graphs and the primitives every extractor builds on.

Vertices are identified with their positions ``1..n`` in the order.  Edges are
stored as sorted per-vertex neighbour lists so that interval queries reduce to
two binary searches.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

Edge = tuple[int, int]


@dataclass(frozen=True, order=True)
class Interval:
    """The closed range of positions ``[lo, hi]``."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def __len__(self) -> int:
        return self.size

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and self.lo <= x <= self.hi

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def shift(self, offset: int) -> Interval:
        return Interval(self.lo + offset, self.hi + offset)

    def __repr__(self) -> str:
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class VertexPath:
    """A simple path given by its vertex sequence."""

    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.seq:
            raise ValueError("a path has at least one vertex")
        if len(set(self.seq)) != len(self.seq):
            raise ValueError(f"repeated vertex in path {self.seq}")

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self) -> Iterator[int]:
        return iter(self.seq)

    def shift(self, offset: int) -> VertexPath:
        return VertexPath(tuple(x + offset for x in self.seq))

    def __repr__(self) -> str:
        return f"VertexPath{list(self.seq)}"


class OrderedGraph:
    """A simple graph on positions ``1..n`` with a fixed total order.

    Values are immutable after construction.  ``edges`` may list each pair in
    either orientation; self-loops, duplicates and out-of-range endpoints raise
    ``ValueError``.
    """

    __slots__ = ("n", "m", "_adj", "_edges", "_ham")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        m = 0
        for e in edges:
            u, v = e
            if u > v:
                u, v = v, u
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if u < 1 or v > n:
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            adj[u].append(v)
            adj[v].append(u)
            m += 1
        for u in range(1, n + 1):
            nbrs = adj[u]
            nbrs.sort()
            for i in range(1, len(nbrs)):
                if nbrs[i] == nbrs[i - 1]:
                    a, b = sorted((u, nbrs[i]))
                    raise ValueError(f"duplicate edge ({a},{b})")
        self.n = n
        self.m = m
        self._adj = adj
        self._edges: tuple[Edge, ...] | None = None
        self._ham: bool | None = None

    # -- basic access -------------------------------------------------------

    def neighbors(self, u: int) -> list[int]:
        """Sorted neighbour list of ``u`` (do not mutate)."""
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    @property
    def edges(self) -> tuple[Edge, ...]:
        """All edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(1, self.n + 1) for v in self._adj[u] if v > u
            )
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or not (1 <= u <= self.n and 1 <= v <= self.n):
            return False
        nbrs = self._adj[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def neighbors_in(self, u: int, lo: int, hi: int) -> list[int]:
        """Neighbours of ``u`` inside the position range ``[lo, hi]``."""
        nbrs = self._adj[u]
        return nbrs[bisect_left(nbrs, lo) : bisect_right(nbrs, hi)]

    @property
    def has_increasing_ham_path(self) -> bool:
        if self._ham is None:
            self._ham = all(self.has_edge(i, i + 1) for i in range(1, self.n))
        return self._ham

    def induced(self, interval: Interval) -> OrderedGraph:
        """The ordered subgraph on ``interval``, re-indexed from 1."""
        lo, hi = interval.lo, interval.hi
        off = lo - 1
        return OrderedGraph(
            hi - lo + 1,
            (
                (u - off, v - off)
                for u in range(lo, hi + 1)
                for v in self.neighbors_in(u, u + 1, hi)
            ),
        )

    def with_edges(self, extra: Iterable[Edge]) -> OrderedGraph:
        """A new graph with ``extra`` edges added (already-present ones are skipped)."""
        new = {tuple(sorted(e)) for e in extra}
        new.difference_update(self.edges)
        return OrderedGraph(self.n, [*self.edges, *new])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedGraph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"OrderedGraph(n={self.n}, m={self.m})"


def path_graph(n: int) -> OrderedGraph:
    """The increasing path on ``n`` vertices."""
    return OrderedGraph(n, ((i, i + 1) for i in range(1, n)))


def check_interval(G: OrderedGraph, interval: Interval) -> None:
    if interval.lo < 1 or interval.hi > G.n:
        raise ValueError(f"interval {interval} outside 1..{G.n}")


# -- crossings ----------------------------------------------------------------


def crossing_pairs(G: OrderedGraph | None, F: Iterable[Edge]) -> list[tuple[Edge, Edge]]:
    """All pairs ``((a, b), (c, d))`` of ``F`` with ``a < c < b < d``.

    Each crossing is reported once, with the edge of smaller left endpoint first.
    Runs in ``O(|F| log |F| + output)`` by sweeping left endpoints while keeping
    the open edges sorted by right endpoint.  ``G`` is only used to check that
    ``F`` is a subset of its edges.
    """
    edges = sorted({tuple(sorted(e)) for e in F})
    if G is not None:
        for a, b in edges:
            if not G.has_edge(a, b):
                raise ValueError(f"({a},{b}) is not an edge of the graph")
    out: list[tuple[Edge, Edge]] = []
    # open edges keyed by right endpoint: (b, a)
    active: list[tuple[int, int]] = []
    i = 0
    while i < len(edges):
        c = edges[i][0]
        # drop edges that end at or before c
        cut = bisect_right(active, (c, float("inf")))
        if cut:
            del active[:cut]
        j = i
        while j < len(edges) and edges[j][0] == c:
            d = edges[j][1]
            lo = bisect_right(active, (c, float("inf")))
            hi = bisect_left(active, (d, -1))
            for b, a in active[lo:hi]:
                out.append(((a, b), (c, d)))
            j += 1
        for k in range(i, j):
            a, b = edges[k]
            pos = bisect_left(active, (b, a))
            active.insert(pos, (b, a))
        i = j
    return out


def is_non_crossing(F: Iterable[Edge], normalized: bool = False) -> bool:
    """Whether no two edges of ``F`` cross; a linear-time stack check after sorting.

    Pass ``normalized=True`` when every edge is already ``(a, b)`` with ``a < b``.
    """
    if not normalized:
        F = {(a, b) if a < b else (b, a) for a, b in F}
    edges = sorted(F, key=lambda e: (e[0], -e[1]))
    stack: list[int] = []  # right endpoints of enclosing edges
    for a, b in edges:
        while stack and stack[-1] <= a:
            stack.pop()
        if stack and stack[-1] < b:
            return False
        stack.append(b)
    return True


# -- gaps -----------------------------------------------------------------------


def max_unhit_run(G: OrderedGraph, u: int, I: Interval) -> tuple[int, Interval | None]:
    """Largest sub-interval of ``I`` containing no neighbour of ``u``.

    Returns ``(size, witness)``; the witness is the leftmost run of maximum size,
    or ``None`` when every vertex of ``I`` is a neighbour.
    """
    best, witness = 0, None
    prev = I.lo - 1
    for h in [*G.neighbors_in(u, I.lo, I.hi), I.hi + 1]:
        run = h - prev - 1
        if run > best:
            best, witness = run, Interval(prev + 1, h - 1)
        prev = h
    return best, witness


def gap(G: OrderedGraph, u: int, I: Interval) -> tuple[int, Interval | None]:
    """Gap of ``u`` towards ``I``: the witness size minus one.

    ``(0, None)`` when ``u`` is adjacent to every vertex of ``I``.
    """
    if u in I:
        raise ValueError(f"vertex {u} lies inside {I}")
    check_interval(G, I)
    size, witness = max_unhit_run(G, u, I)
    return max(size - 1, 0), witness


def adjacent_to_interval(G: OrderedGraph, u: int, I: Interval) -> bool:
    return bool(G.neighbors_in(u, I.lo, I.hi))


def blocks(I: Interval, g: int) -> list[Interval]:
    """Split ``I`` into ``|I| // g`` consecutive blocks of size at least ``g``.

    All blocks have size ``g`` except the last, which absorbs the remainder.
    """
    p = I.size // g
    if p == 0:
        return []
    out = [Interval(I.lo + i * g, I.lo + (i + 1) * g - 1) for i in range(p - 1)]
    out.append(Interval(I.lo + (p - 1) * g, I.hi))
    return out


# -- quotient and cutwidth --------------------------------------------------------


def quotient(G: OrderedGraph, parts: Sequence[Interval]) -> OrderedGraph:
    """Contract each interval of an ordered partition of ``[1, n]`` to one vertex."""
    expect = 1
    for part in parts:
        if part.lo != expect:
            raise ValueError(f"parts do not partition 1..{G.n}: gap or overlap at {part}")
        expect = part.hi + 1
    if expect != G.n + 1:
        raise ValueError(f"parts do not cover 1..{G.n}")
    owner = [0] * (G.n + 1)
    for idx, part in enumerate(parts, start=1):
        for x in part:
            owner[x] = idx
    qedges = {(owner[u], owner[v]) for u, v in G.edges if owner[u] != owner[v]}
    Q = OrderedGraph(len(parts), qedges)
    if G.has_increasing_ham_path:
        assert Q.has_increasing_ham_path
    return Q


def cutwidth_of_edges(n: int, F: Iterable[Edge]) -> int:
    """Largest number of edges of ``F`` across a cut ``{1..i} | {i+1..n}``."""
    diff = [0] * (n + 2)
    for e in F:
        a, b = sorted(e)
        diff[a] += 1
        diff[b] -= 1
    best = cur = 0
    for i in range(1, n + 1):
        cur += diff[i]
        if cur > best:
            best = cur
    return best


def cutwidth(G: OrderedGraph) -> int:
    """Cutwidth of ``G`` for its given order (no minimisation over orders)."""
    return cutwidth_of_edges(G.n, G.edges)


def is_seq_of_increasing_paths(G: OrderedGraph | None, F: Iterable[Edge]) -> bool:
    """True iff the ordered graph formed by ``F`` has cutwidth at most one."""
    F = list(F)
    n = G.n if G is not None else max((max(e) for e in F), default=0)
    return cutwidth_of_edges(n, F) <= 1


# -- increasing paths --------------------------------------------------------------


def shortest_increasing_path(G: OrderedGraph, s: int, t: int) -> VertexPath | None:
    """A shortest ``s -> t`` path along increasing edges, or ``None``.

    All such paths live inside ``[s, t]``.  Being shortest, the path has no
    chord, so it is an increasing induced path.  Among shortest paths the one
    whose predecessors are smallest is returned.
    """
    if s > t:
        raise ValueError("need s <= t")
    if s == t:
        return VertexPath((s,))
    inf = t - s + 2
    dist = [inf] * (t - s + 1)
    pred = [0] * (t - s + 1)
    dist[0] = 0
    adj = G._adj
    for x in range(s, t + 1):
        dx = dist[x - s]
        if dx == inf:
            continue
        nbrs = adj[x]
        for y in nbrs[bisect_right(nbrs, x) : bisect_right(nbrs, t)]:
            if dx + 1 < dist[y - s]:
                dist[y - s] = dx + 1
                pred[y - s] = x
    if dist[t - s] == inf:
        return None
    seq = [t]
    while seq[-1] != s:
        seq.append(pred[seq[-1] - s])
    seq.reverse()
    path = VertexPath(tuple(seq))
    assert verify_induced_increasing(G, path)
    return path


def verify_induced_increasing(G: OrderedGraph, P: VertexPath | Sequence[int]) -> bool:
    """Strictly increasing, consecutive pairs adjacent, no chord."""
    seq = P.seq if isinstance(P, VertexPath) else tuple(P)
    if not seq:
        return False
    if any(not 1 <= x <= G.n for x in seq):
        return False
    if any(a >= b for a, b in zip(seq, seq[1:])):
        return False
    return is_induced_path(G, seq)


def is_induced_path(G: OrderedGraph, seq: Sequence[int]) -> bool:
    """Consecutive pairs adjacent, no other pair adjacent, no repeats."""
    if len(set(seq)) != len(seq):
        return False
    index = {x: i for i, x in enumerate(seq)}
    for i, x in enumerate(seq):
        for y in G.neighbors(x):
            j = index.get(y)
            if j is not None and abs(i - j) != 1:
                return False
    return all(G.has_edge(a, b) for a, b in zip(seq, seq[1:]))
