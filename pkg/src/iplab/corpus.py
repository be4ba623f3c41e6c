"""Seeded random ordered graphs with a known non-crossing edge partition."""

from __future__ import annotations

import random

from .core import Edge, OrderedGraph
from .noncross import EdgeColoring


def random_knc(
    n: int, k: int = 2, chords: int | None = None, seed: int = 0
) -> tuple[OrderedGraph, EdgeColoring]:
    """Hamiltonian path ``1..n`` plus random chords, each in one of ``k`` non-crossing classes.

    ``chords`` is the number of placement attempts (default ``2n``); a chord is
    kept only if some class can take it without a crossing.  Path edges never
    cross anything and go to class 1.  With ``k <= 2`` the result is planar.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    rng = random.Random(seed)
    classes: list[list[Edge]] = [[] for _ in range(k)]
    color: dict[Edge, int] = {(i, i + 1): 1 for i in range(1, n)}
    attempts = 2 * n if chords is None else chords
    for _ in range(attempts if n >= 3 else 0):
        a = rng.randint(1, n - 2)
        b = rng.randint(a + 2, n)
        if (a, b) in color:
            continue
        order = rng.sample(range(k), k)
        for c in order:
            if not any(x < a < y < b or a < x < b < y for x, y in classes[c]):
                classes[c].append((a, b))
                color[(a, b)] = c + 1
                break
    return OrderedGraph(n, color), EdgeColoring(k, color)
