"""Increasing induced paths in planar, bounded-genus and 2-non-crossing graphs.

The driver keeps a *good triple* ``(u, I, v)``: two increasing induced paths
``L`` (ending at ``u``) and ``R`` (starting at ``v``) flank an interval ``I``
that is invisible from ``L - u`` and ``R - v`` and from at least one of
``u, v``.  Each step moves one tip one neighbour closer to ``I`` and shrinks
``I`` to a long run avoided by a tip; when neither tip leaves such a run the
interval carries a long path of its own.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from collections.abc import Callable
from dataclasses import dataclass

from .core import (
    Interval,
    OrderedGraph,
    VertexPath,
    blocks,
    max_unhit_run,
    shortest_increasing_path,
    verify_induced_increasing,
)
from .errors import AllIntervalsFailed, NotTwoPartitionable
from .noncross import EdgeColoring, two_partition, two_partition_or_raise, verify_partition
from .report import PathReport


def shrink_ratio(n: int) -> int:
    """``max(2, ceil(log2 n / log2 log2 n))``, pinned to 2 below 16 vertices."""
    if n < 16:
        return 2
    lg = math.log2(n)
    return max(2, math.ceil(lg / math.log2(lg)))


def _require_ham(G: OrderedGraph) -> None:
    if not G.has_increasing_ham_path:
        raise ValueError("graph has no increasing Hamiltonian path")


# -- planar reduction ---------------------------------------------------------------


def _longest_edge(G: OrderedGraph) -> tuple[int, int]:
    span, i, j = 0, 1, 1
    for a, b in G.edges:
        if b - a > span:
            span, i, j = b - a, a, b
    return i, j


def reduce_to_2nc(
    G: OrderedGraph, k_target: int
) -> VertexPath | tuple[Interval, EdgeColoring]:
    """Either an increasing induced path on ``k_target`` vertices or a long 2-non-crossing interval.

    Takes the edge ``(i, j)`` of largest span.  A short span forces every
    increasing ``1 -> n`` path to be long; otherwise the interval ``[i, j]``
    is closed into a cycle by that edge and is returned with a two-class
    partition of its ordered subgraph (re-indexed from 1).
    """
    _require_ham(G)
    if k_target < 1:
        raise ValueError("k_target must be positive")
    i, j = _longest_edge(G)
    span = j - i
    if span * k_target <= G.n - 1:
        path = shortest_increasing_path(G, 1, G.n)
        assert path is not None and len(path) >= k_target
        return path
    J = Interval(i, j)
    try:
        coloring = two_partition_or_raise(G.induced(J))
    except NotTwoPartitionable as exc:
        raise NotTwoPartitionable(exc.cycle, offset=i - 1) from None
    return J, coloring


# -- gap lemma and good triples --------------------------------------------------------


def gap_or_path(
    G: OrderedGraph,
    c: EdgeColoring | None,
    u: int,
    I: Interval,
    v: int,
    g: int,
) -> VertexPath | tuple[int, Interval]:
    """A tip with an unhit run of ``g`` vertices in ``I``, or a path across ``I``.

    Gap branch: ``(x, witness)`` for the first of ``u, v`` leaving a run of at
    least ``g`` consecutive non-neighbours in ``I``; the witness is its
    leftmost longest run.  Path branch: both tips hit every block of ``g``
    vertices, so with ``c`` a two-class non-crossing partition the middle
    blocks form a chain and the shortest increasing path through them visits
    all ``|I| // g - 2`` of them.  ``c`` backs that bound; the construction
    never reads it.
    """
    if not (u < I.lo and I.hi < v):
        raise ValueError(f"need u < I < v, got {u}, {I}, {v}")
    if g < 1:
        raise ValueError("g must be positive")
    for x in (u, v):
        run, witness = max_unhit_run(G, x, I)
        if run >= g:
            return x, witness
    p = I.size // g
    if p < 4:
        return VertexPath((I.lo, I.lo + 1) if I.size >= 2 else (I.lo,))
    middle = blocks(I, g)[1:-1]
    path = shortest_increasing_path(G, middle[0].lo, middle[-1].hi)
    assert path is not None
    assert len(path) >= p - 2, (len(path), p)
    return path


@dataclass(frozen=True)
class GoodTriple:
    u: int
    I: Interval
    v: int
    L: VertexPath
    R: VertexPath

    @property
    def k(self) -> int:
        return len(self.L) + len(self.R)

    def violations(self, G: OrderedGraph) -> list[str]:
        """Every invariant of the triple that fails, checked from scratch."""
        out = []
        I = self.I
        if not (self.u < I.lo and I.hi < self.v):
            out.append("order")
        if G.neighbors_in(self.u, I.lo, I.hi) and G.neighbors_in(self.v, I.lo, I.hi):
            out.append("both tips see I")
        if not verify_induced_increasing(G, self.L) or self.L.seq[-1] != self.u:
            out.append("L")
        if not verify_induced_increasing(G, self.R) or self.R.seq[0] != self.v:
            out.append("R")
        for x in (*self.L.seq[:-1], *self.R.seq[1:]):
            if G.neighbors_in(x, I.lo, I.hi):
                out.append(f"{x} sees I")
        return out


def _extends_induced(G: OrderedGraph, seq: tuple[int, ...], new: int, tip: int) -> bool:
    """``new`` touches the sorted path ``seq`` only at ``tip``."""
    lo, hi = seq[0], seq[-1]
    for w in G.neighbors_in(new, lo, hi):
        i = bisect_left(seq, w)
        if i < len(seq) and seq[i] == w and w != tip:
            return False
    return G.has_edge(new, tip)


def grow_triple(
    G: OrderedGraph, c: EdgeColoring | None, T: GoodTriple, g: int
) -> VertexPath | GoodTriple:
    """One growth step: a path across ``I`` or a good triple one vertex larger.

    The tip that does not see ``I`` (``u`` on ties) steps to its neighbour
    closest to ``I``; the new interval is the gap witness, which lies inside
    ``I`` and has at least ``g`` vertices.
    """
    u, I, v = T.u, T.I, T.v
    if not G.neighbors_in(u, I.lo, I.hi):
        step = G.neighbors_in(u, 1, I.lo - 1)[-1]
        assert step > u, "the Hamiltonian successor of u lies below I"
        res = gap_or_path(G, c, step, I, v, g)
        if isinstance(res, VertexPath):
            return res
        _, J = res
        assert _extends_induced(G, T.L.seq, step, u)
        new = GoodTriple(step, J, v, VertexPath((*T.L.seq, step)), T.R)
    else:
        assert not G.neighbors_in(v, I.lo, I.hi), "neither tip avoids I"
        step = G.neighbors_in(v, I.hi + 1, G.n)[0]
        assert step < v, "the Hamiltonian predecessor of v lies above I"
        res = gap_or_path(G, c, u, I, step, g)
        if isinstance(res, VertexPath):
            return res
        _, J = res
        assert _extends_induced(G, T.R.seq, step, v)
        new = GoodTriple(u, J, step, T.L, VertexPath((step, *T.R.seq)))
    # what the step changes; untouched invariants carry over because J is inside I
    assert I.lo <= J.lo and J.hi <= I.hi and J.size >= g
    assert not G.neighbors_in(new.u, J.lo, J.hi) or not G.neighbors_in(new.v, J.lo, J.hi)
    old_tip = u if new.L is not T.L else v
    assert not G.neighbors_in(old_tip, J.lo, J.hi)
    assert new.k == T.k + 1
    return new


def _tip_extensions(G: OrderedGraph, T: GoodTriple) -> list[VertexPath]:
    """``L`` or ``R`` extended by the step the path branch interrupted, when still induced."""
    I, out = T.I, []
    if not G.neighbors_in(T.u, I.lo, I.hi):
        cand = VertexPath((*T.L.seq, G.neighbors_in(T.u, 1, I.lo - 1)[-1]))
    else:
        cand = VertexPath((G.neighbors_in(T.v, I.hi + 1, G.n)[0], *T.R.seq))
    if verify_induced_increasing(G, cand):
        out.append(cand)
    return out


def extract_2nc(
    G: OrderedGraph,
    c: EdgeColoring,
    check: bool = True,
    full_check: bool = False,
    observer: Callable[[int, GoodTriple], None] | None = None,
) -> PathReport:
    """Run the good-triple loop from ``(v_1, [v_2, v_{n-1}], v_n)``.

    The certified size is ``t // 2`` after ``t`` completed growth steps (the
    longer of ``L`` and ``R``).  ``full_check`` re-verifies every triple from
    scratch after each step; ``observer(t, T)`` sees every triple.
    """
    n = G.n
    if n < 8:
        raise ValueError("need at least 8 vertices")
    _require_ham(G)
    if check and (not verify_partition(G, c) or len(c.used_colors()) > 2):
        raise ValueError("colouring is not a two-class non-crossing partition")
    rho = shrink_ratio(n)
    I0 = Interval(2, n - 1)
    g = max(1, I0.size // rho)
    trace: list[tuple] = []
    candidates: list[tuple[str, VertexPath]] = []

    res = gap_or_path(G, c, 1, I0, n, g)
    t = 0
    T: GoodTriple | None = None
    if isinstance(res, VertexPath):
        trace.append((0, I0.size, g, "path"))
        candidates.append(("gap-shortcut", res))
    else:
        x, J = res
        trace.append((0, I0.size, g, "gap-u" if x == 1 else "gap-v"))
        T = GoodTriple(1, J, n, VertexPath((1,)), VertexPath((n,)))
        if observer:
            observer(0, T)
        while True:
            g = max(1, T.I.size // rho)
            nxt = grow_triple(G, c, T, g)
            if isinstance(nxt, VertexPath):
                trace.append((t + 1, T.I.size, g, "path"))
                candidates.append(("gap-shortcut", nxt))
                candidates.extend(("triple-loop", P) for P in _tip_extensions(G, T))
                break
            side = "gap-u" if nxt.L is not T.L else "gap-v"
            trace.append((t + 1, T.I.size, g, side))
            if full_check:
                assert not nxt.violations(G), nxt.violations(G)
            T = nxt
            t += 1
            if observer:
                observer(t, T)
        longer = T.L if len(T.L) >= len(T.R) else T.R
        candidates.append(("triple-loop", longer))
    lift = shortest_increasing_path(G, 1, n)
    assert lift is not None
    candidates.append(("lifting", lift))

    method, best = max(candidates, key=lambda mc: len(mc[1]))
    assert verify_induced_increasing(G, best)
    report = PathReport(n, best, method, iterations=t, guarantee=t // 2, trace=trace)
    if T is not None:
        report.extra["final_triple"] = {
            "u": T.u,
            "I": [T.I.lo, T.I.hi],
            "v": T.v,
            "L": list(T.L.seq),
            "R": list(T.R.seq),
        }
    return report


# -- planar and genus drivers ----------------------------------------------------------


def extract_planar(G: OrderedGraph) -> PathReport:
    """Planar input: reduce to a 2-non-crossing interval, then run the triple loop.

    When the reduction settles for the lifting path, the interval under the
    longest edge is still tried if it splits into two classes, and the longer
    result wins.  Raises ``NotTwoPartitionable`` (in ``G``'s coordinates) only
    when the reduction needs that interval and it does not split, which cannot
    happen for planar input.
    """
    _require_ham(G)
    n = G.n
    k_target = math.ceil(shrink_ratio(n) / 2)
    res = reduce_to_2nc(G, k_target)
    if isinstance(res, VertexPath):
        best = PathReport(n, res, "lifting", guarantee=k_target, trace=[(0, n, k_target, "path")])
        J = Interval(*_longest_edge(G))
        coloring = two_partition(G.induced(J)) if J.size >= 8 else None
        if coloring is None:
            return best
    else:
        J, coloring = res
        lift = shortest_increasing_path(G, 1, n)
        assert lift is not None
        best = PathReport(n, lift, "lifting", trace=[(0, n, k_target, "interval")])
    H = G.induced(J)
    if H.n >= 8:
        inner = extract_2nc(H, coloring, check=False)
        shifted = inner.path.shift(J.lo - 1)
        assert verify_induced_increasing(G, shifted)
        if len(shifted) > len(best.path):
            best = PathReport(
                n,
                shifted,
                inner.method,
                iterations=inner.iterations,
                guarantee=max(best.guarantee, inner.guarantee),
                trace=best.trace + inner.trace,
            )
        else:
            best.guarantee = max(best.guarantee, inner.guarantee)
            best.iterations = inner.iterations
    best.extra["interval"] = [J.lo, J.hi]
    return best


def extract_genus(G: OrderedGraph, genus: int) -> PathReport:
    """Split the order into ``genus + 1`` intervals and run the planar driver on each.

    Some interval induces a planar graph when ``G`` embeds in a surface of that
    genus; intervals whose reduction is not 2-non-crossing are skipped.
    """
    _require_ham(G)
    if genus < 0:
        raise ValueError("genus must be non-negative")
    n = G.n
    parts = genus + 1
    if n < 2 * parts:
        raise ValueError(f"need at least {2 * parts} vertices")
    size = n // parts
    best: PathReport | None = None
    failed = []
    for idx in range(parts):
        lo = 1 + idx * size
        hi = n if idx == parts - 1 else (idx + 1) * size
        try:
            rep = extract_planar(G.induced(Interval(lo, hi)))
        except NotTwoPartitionable:
            failed.append([lo, hi])
            continue
        shifted = rep.path.shift(lo - 1)
        assert verify_induced_increasing(G, shifted)
        if best is None or len(shifted) > len(best.path):
            best = PathReport(
                n,
                shifted,
                rep.method,
                iterations=rep.iterations,
                guarantee=rep.guarantee,
                trace=rep.trace,
                extra={"interval": [lo, hi]},
            )
    if best is None:
        raise AllIntervalsFailed(f"all {parts} intervals failed to split into two classes")
    best.extra["failed_intervals"] = failed
    return best
