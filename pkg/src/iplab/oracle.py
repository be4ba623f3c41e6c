"""Exact longest-induced-path solvers for desk-scale graphs.

Both solvers extend a path one vertex at a time.  A vertex may be appended only
if it is adjacent to the current endpoint and to no other path vertex; this is
tracked with a ``blocked`` bitset holding the closed neighbourhoods of every
path vertex except the endpoint.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from .core import OrderedGraph, VertexPath, is_induced_path, verify_induced_increasing

DEFAULT_BUDGET = 10**8
MEMO_LIMIT = 64


def default_budget() -> int:
    return int(os.environ.get("IPLAB_BUDGET", DEFAULT_BUDGET))


@dataclass
class OracleResult:
    best: VertexPath
    optimal: bool
    nodes_expanded: int
    time_ms: float

    def __len__(self) -> int:
        return len(self.best)

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "best": list(self.best.seq),
            "length": len(self.best),
            "optimal": self.optimal,
            "nodes_expanded": self.nodes_expanded,
        }
        if timing:
            out["time_ms"] = round(self.time_ms, 3)
        return out


class _OutOfBudget(Exception):
    pass


def _bitsets(G: OrderedGraph) -> tuple[list[int], list[int]]:
    nbr = [0] * (G.n + 1)
    for u in range(1, G.n + 1):
        mask = 0
        for v in G.neighbors(u):
            mask |= 1 << v
        nbr[u] = mask
    closed = [nbr[u] | (1 << u) for u in range(G.n + 1)]
    return nbr, closed


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def longest_induced_path(G: OrderedGraph, budget: int | None = None) -> OracleResult:
    """Branch and bound over simple path extensions that keep the path induced."""
    budget = default_budget() if budget is None else budget
    t0 = time.perf_counter()
    if G.n == 0:
        raise ValueError("empty graph")
    nbr, closed = _bitsets(G)
    everything = ((1 << (G.n + 1)) - 1) ^ 1
    best: list[int] = [1]
    path: list[int] = []
    expanded = 0

    def extend(end: int, blocked: int) -> None:
        nonlocal best, expanded
        expanded += 1
        if expanded > budget:
            raise _OutOfBudget
        if len(path) > len(best):
            best = list(path)
        cand = nbr[end] & ~blocked
        if not cand:
            return
        rest = everything & ~(blocked | closed[end])
        if len(path) + 1 + rest.bit_count() <= len(best):
            return
        nb = blocked | closed[end]
        for w in _bits(cand):
            path.append(w)
            extend(w, nb)
            path.pop()

    optimal = True
    try:
        for s in range(1, G.n + 1):
            path.append(s)
            extend(s, 0)
            path.pop()
            if len(best) == G.n:
                break
    except _OutOfBudget:
        optimal = False
    result = VertexPath(tuple(best))
    assert is_induced_path(G, result.seq)
    return OracleResult(result, optimal, expanded, (time.perf_counter() - t0) * 1000)


def longest_increasing_induced_path(
    G: OrderedGraph, budget: int | None = None
) -> OracleResult:
    """Depth-first search over increasing extensions.

    Up to ``MEMO_LIMIT`` vertices the best continuation is memoised on the
    endpoint and the blocked vertices above it; beyond that the search prunes
    with the number of unblocked vertices above the endpoint.
    """
    budget = default_budget() if budget is None else budget
    t0 = time.perf_counter()
    if G.n == 0:
        raise ValueError("empty graph")
    n = G.n
    nbr, closed = _bitsets(G)
    above = [((1 << (n + 1)) - 1) & ~((1 << (v + 1)) - 1) for v in range(n + 1)]
    expanded = 0
    best: tuple[int, ...] = (1,)
    use_memo = n <= MEMO_LIMIT
    memo: dict[tuple[int, int], tuple[int, ...]] = {}

    def tick() -> None:
        nonlocal expanded
        expanded += 1
        if expanded > budget:
            raise _OutOfBudget

    def suffix(end: int, blocked: int) -> tuple[int, ...]:
        # longest continuation after ``end``; ``blocked`` is already cut to above(end)
        key = (end, blocked)
        hit = memo.get(key)
        if hit is not None:
            return hit
        tick()
        nb = (blocked | closed[end]) & above[end]
        out: tuple[int, ...] = ()
        for w in _bits(nbr[end] & above[end] & ~blocked):
            tail = (w, *suffix(w, nb & above[w]))
            if len(tail) > len(out):
                out = tail
        memo[key] = out
        return out

    path: list[int] = []

    def dfs(end: int, blocked: int) -> None:
        nonlocal best
        tick()
        if len(path) > len(best):
            best = tuple(path)
        cand = nbr[end] & above[end] & ~blocked
        if not cand:
            return
        rest = above[end] & ~(blocked | closed[end])
        if len(path) + 1 + rest.bit_count() <= len(best):
            return
        nb = blocked | closed[end]
        for w in _bits(cand):
            path.append(w)
            dfs(w, nb)
            path.pop()

    optimal = True
    try:
        for s in range(1, n + 1):
            if n - s + 1 <= len(best):
                break
            if use_memo:
                cand = (s, *suffix(s, 0))
                if len(cand) > len(best):
                    best = cand
            else:
                path.append(s)
                dfs(s, 0)
                path.pop()
    except _OutOfBudget:
        optimal = False
    result = VertexPath(best)
    assert verify_induced_increasing(G, result)
    return OracleResult(result, optimal, expanded, (time.perf_counter() - t0) * 1000)
