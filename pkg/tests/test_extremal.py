from __future__ import annotations

import math

import pytest

from iplab.core import OrderedGraph, path_graph
from iplab.extremal import build_g, build_u, expected_size, glue, ip_upper_bound
from iplab.noncross import verify_partition
from iplab.oracle import longest_induced_path


def test_glue():
    assert glue(path_graph(2), path_graph(2)) == path_graph(3)
    assert glue(path_graph(3), path_graph(3)) == path_graph(5)
    A, B = build_u(2).graph, build_u(3).graph
    assert glue(A, B).n == A.n + B.n - 1
    with pytest.raises(ValueError):
        glue(OrderedGraph(0, []), path_graph(2))


class TestU:
    def test_small(self):
        assert build_u(0).graph == path_graph(2)
        assert build_u(1).graph == OrderedGraph(3, [(1, 2), (2, 3), (1, 3)])
        assert set(build_u(2).graph.edges) == {(1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (3, 5), (1, 5)}

    @pytest.mark.parametrize("p", range(0, 13))
    def test_size_and_certificate(self, p):
        inst = build_u(p)
        assert inst.n == 2**p + 1
        assert inst.coloring.k == 1 and verify_partition(inst.graph, inst.coloring)
        assert inst.graph.has_increasing_ham_path

    def test_guard(self):
        with pytest.raises(ValueError):
            build_u(25)
        with pytest.raises(ValueError):
            build_u(-1)


class TestG:
    def test_g11_edges(self):
        inst = build_g(1, 1)
        chords = {(1, 3), (3, 5), (5, 7), (7, 9), (1, 5), (5, 9), (1, 9), (1, 7), (3, 9)}
        assert set(inst.graph.edges) == set(path_graph(9).edges) | chords
        assert inst.x_set == (1, 3, 5, 7, 9)
        assert inst.copies == [(1, 3), (3, 5), (5, 7), (7, 9)]

    def test_aliases(self):
        assert build_g(0, 2).graph == build_u(3).graph
        assert build_g(0, 1).graph == build_u(2).graph
        assert build_g(3, 0).graph == path_graph(3)

    @pytest.mark.parametrize("k,p", [(k, p) for k in range(3) for p in range(3)])
    def test_size_formula(self, k, p):
        inst = build_g(k, p)
        assert inst.n == expected_size(k, p) == 2 ** math.comb(k + p + 1, p) + 1
        assert verify_partition(inst.graph, inst.coloring)
        assert inst.coloring.used_colors() <= set(range(1, 2 * k + 2))

    def test_size_examples(self):
        assert expected_size(1, 1) == 9
        assert [expected_size(0, p) for p in range(5)] == [2 ** (p + 1) + 1 for p in range(5)]
        assert expected_size(2, 2) == 1025
        for k in range(1, 3):
            for p in range(1, 3):
                assert expected_size(k, p) == (expected_size(k - 1, p) - 1) * (expected_size(k, p - 1) - 1) + 1

    def test_size_guard(self):
        with pytest.raises(OverflowError):
            expected_size(3, 4)

    @pytest.mark.parametrize("k,p", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)])
    def test_copies_structure(self, k, p):
        inst = build_g(k, p)
        X = set(inst.x_set)
        copy_of = {}
        for idx, (a, b) in enumerate(inst.copies):
            for x in range(a + 1, b):
                copy_of[x] = idx
        for a, b in inst.graph.edges:
            if a in copy_of and b in copy_of:
                # no edge joins the interiors of two distinct copies
                assert copy_of[a] == copy_of[b]
            if a not in X or b not in X:
                # edges outside the copies' own edge sets only join extremities
                lo_copy = copy_of.get(a, copy_of.get(b))
                c_lo, c_hi = inst.copies[lo_copy]
                assert c_lo <= a and b <= c_hi
        for idx, (a, b) in enumerate(inst.copies):
            for x in range(a + 1, b):
                for y in inst.graph.neighbors(x):
                    assert a <= y <= b


def test_upper_bounds():
    assert ip_upper_bound("U", 0, 2) == 6
    assert ip_upper_bound("G", 1, 1) == 8
    assert ip_upper_bound("U", 0, 0) == 2
    assert ip_upper_bound("G", 0, 1) == 6
    with pytest.raises(ValueError):
        ip_upper_bound("X", 0, 0)


@pytest.mark.parametrize("family,k,p", [("U", 0, p) for p in range(5)] + [("G", 1, 0), ("G", 1, 1), ("G", 2, 0), ("G", 2, 1), ("G", 0, 2)])
def test_oracle_below_upper_bound(family, k, p):
    inst = build_u(p) if family == "U" else build_g(k, p)
    res = longest_induced_path(inst.graph)
    assert res.optimal and len(res) <= inst.upper_bound()
