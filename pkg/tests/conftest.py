from __future__ import annotations

import itertools

import pytest

from iplab.core import OrderedGraph
from iplab.corpus import random_knc
from iplab.extremal import LabeledInstance, build_g, build_u
from iplab.noncross import EdgeColoring

# (k, p) pairs of G(k, p) small enough to extract on in well under a second
G_SMALL = [(0, 0), (0, 1), (0, 2), (0, 5), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2), (3, 1), (4, 1)]


def extremal_corpus() -> list[LabeledInstance]:
    return [build_u(p) for p in range(0, 11)] + [build_g(k, p) for k, p in G_SMALL]


def random_corpus(count: int = 40, k: int = 2, max_n: int = 120, seed0: int = 0) -> list[tuple[OrderedGraph, EdgeColoring]]:
    out = []
    for s in range(seed0, seed0 + count):
        n = 8 + (s * 37) % (max_n - 7)
        out.append(random_knc(n, k, seed=s))
    return out


def two_colour(inst: LabeledInstance) -> EdgeColoring:
    """The 1-colour certificates of U_p and G(0, p) as 2-class colourings."""
    assert inst.coloring.k == 1
    return EdgeColoring(2, inst.coloring.color)


def brute_induced_increasing(G: OrderedGraph) -> int:
    best = 1
    for r in range(2, G.n + 1):
        found = False
        for seq in itertools.combinations(range(1, G.n + 1), r):
            if all(G.has_edge(a, b) == (j == i + 1) for i, a in enumerate(seq) for j, b in enumerate(seq) if i < j):
                found = True
                break
        if not found:
            break
        best = r
    return best


@pytest.fixture(scope="session")
def extremal() -> list[LabeledInstance]:
    return extremal_corpus()
