"""Increasing induced paths in k-non-crossing ordered graphs.

``k`` rooted trees flank an interval ``I``: ``p = ceil(k/2)`` on the left and
``k - p`` on the right.  Each step hangs a root that avoids ``I`` under its
neighbour closest to ``I`` (merging two trees if that neighbour already belongs
to one) and then shrinks ``I`` to a run avoided by one of the new roots.  Tree
edges carry the index of the tree they were created for; every colour class
stays an increasing sequence of increasing paths, which bounds the tree
cutwidth and forces depth, and every root-to-leaf path is induced.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field, replace

from .core import (
    Interval,
    OrderedGraph,
    VertexPath,
    blocks,
    cutwidth_of_edges,
    max_unhit_run,
    shortest_increasing_path,
    verify_induced_increasing,
)
from .errors import Degenerate
from .noncross import EdgeColoring, verify_partition
from .report import PathReport

LEFT, RIGHT = "L", "R"


# -- depth / size bounds ------------------------------------------------------------


def tree_size_bound(depth: int, c: int) -> int:
    """Most vertices a compatibly ordered rooted tree of this depth and cutwidth can have."""
    if depth < 0 or c < 0:
        raise ValueError("depth and cutwidth must be non-negative")
    if depth == 0:
        return 0
    return math.comb(depth + c - 1, c)


def depth_lower_bound(size: int, p: int) -> float:
    """``2 - p + (p / e) * size ** (1 / p)``; reported, never used for control flow."""
    if size < 1 or p < 1:
        raise ValueError("size and p must be positive")
    return 2 - p + (p / math.e) * size ** (1 / p)


def certified_depth(size: int, p: int) -> int:
    """Smallest depth the size bound allows for a tree of ``size`` vertices and cutwidth ``p``."""
    d = 1
    while tree_size_bound(d, p) < size:
        d += 1
    return d


# -- coloured trees ------------------------------------------------------------------


@dataclass(frozen=True)
class ColoredTree:
    """A rooted tree on positions; ``parent`` and ``color`` are keyed by child."""

    root: int
    side: str
    parent: Mapping[int, int] = field(default_factory=dict)
    color: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")
        if self.root in self.parent:
            raise ValueError("root has a parent")
        if set(self.parent) != set(self.color):
            raise ValueError("every tree edge needs a colour")
        for child, par in self.parent.items():
            # compatible order: descendants precede ancestors on the left, follow them on the right
            if (self.side == LEFT) != (child < par):
                raise ValueError(f"edge {child}->{par} violates the {self.side} orientation")
            if par != self.root and par not in self.parent:
                raise ValueError(f"parent {par} of {child} is not in the tree")
        # with monotone parent pointers every chain ends at the root: no cycles

    @classmethod
    def singleton(cls, x: int, side: str) -> ColoredTree:
        return cls(x, side)

    @property
    def nodes(self) -> set[int]:
        return {self.root, *self.parent}

    @property
    def size(self) -> int:
        return 1 + len(self.parent)

    def edges(self) -> list[tuple[int, int, int]]:
        """``(lo, hi, colour)`` for every tree edge."""
        return [(min(ch, par), max(ch, par), self.color[ch]) for ch, par in self.parent.items()]

    def depths(self) -> dict[int, int]:
        # parents come before children when scanning from the root's side
        order = sorted(self.nodes, reverse=self.side == LEFT)
        depth = {self.root: 1}
        for x in order:
            if x != self.root:
                depth[x] = depth[self.parent[x]] + 1
        return depth

    @property
    def depth(self) -> int:
        return max(self.depths().values())

    def deepest_path(self) -> VertexPath:
        """Longest root-to-leaf path, listed in increasing order."""
        depth = self.depths()
        leaf = min(x for x, d in depth.items() if d == max(depth.values()))
        chain = [leaf]
        while chain[-1] != self.root:
            chain.append(self.parent[chain[-1]])
        return VertexPath(tuple(sorted(chain)))

    def hang_under(self, v: int, col: int, onto: ColoredTree | None = None) -> ColoredTree:
        """Make ``v`` the parent of this tree's root.

        Without ``onto``, ``v`` becomes the new root; otherwise ``v`` must be a
        node of ``onto`` and the result is ``onto`` with this tree attached.
        """
        parent = {**self.parent, self.root: v}
        color = {**self.color, self.root: col}
        if onto is None:
            return ColoredTree(v, self.side, parent, color)
        if v not in onto.nodes:
            raise ValueError(f"{v} is not in the target tree")
        return ColoredTree(onto.root, onto.side, {**onto.parent, **parent}, {**onto.color, **color})


@dataclass(frozen=True)
class TreeSurrounding:
    left: tuple[ColoredTree, ...]
    I: Interval
    right: tuple[ColoredTree, ...]

    @property
    def p(self) -> int:
        return len(self.left)

    @property
    def k(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def trees(self) -> tuple[ColoredTree, ...]:
        return self.left + self.right

    @property
    def total_size(self) -> int:
        return sum(t.size for t in self.trees)

    def roots(self) -> list[int]:
        return [t.root for t in self.trees]

    def sizes(self) -> list[int]:
        return [t.size for t in self.trees]


def initial_surrounding(n: int, k: int, I: Interval) -> TreeSurrounding:
    p = math.ceil(k / 2)
    left = tuple(ColoredTree.singleton(i, LEFT) for i in range(1, p + 1))
    right = tuple(ColoredTree.singleton(n - j + 1, RIGHT) for j in range(1, k - p + 1))
    return TreeSurrounding(left, I, right)


def verify_surrounding(
    G: OrderedGraph, c: EdgeColoring | None, T: TreeSurrounding
) -> list[int]:
    """Indices of the six surrounding conditions that fail (empty when all hold).

    1. left trees precede ``I``, right trees follow it, trees are disjoint;
    2. left edges use colours ``1..p``, right edges ``p+1..k``;
    3. each colour class has cutwidth at most one and its tree's root is
       extremal among the vertices it touches;
    4. no non-root vertex is in or adjacent to ``I``;
    5. each non-root's parent is its nearest neighbour on the far side of ``I``;
    6. some root has no neighbour in ``I``.

    ``c`` is accepted for symmetry with the other operations; the conditions
    only involve tree colours.
    """
    bad: list[int] = []
    I, p, k = T.I, T.p, T.k

    seen: set[int] = set()
    ok1 = True
    for tree in T.trees:
        nodes = tree.nodes
        if seen & nodes:
            ok1 = False
        seen |= nodes
        if tree.side == LEFT and max(nodes) >= I.lo:
            ok1 = False
        if tree.side == RIGHT and min(nodes) <= I.hi:
            ok1 = False
    if not ok1 or any(t.side != LEFT for t in T.left) or any(t.side != RIGHT for t in T.right):
        bad.append(1)

    if any(not 1 <= col <= p for t in T.left for col in t.color.values()) or any(
        not p < col <= k for t in T.right for col in t.color.values()
    ):
        bad.append(2)

    by_color: dict[int, list[tuple[int, int]]] = {}
    for tree in T.trees:
        for lo, hi, col in tree.edges():
            by_color.setdefault(col, []).append((lo, hi))
    ok3 = True
    for col, F in by_color.items():
        if cutwidth_of_edges(G.n, F) > 1:
            ok3 = False
            continue
        owner = T.left[col - 1] if col <= p else T.right[col - p - 1] if col <= k else None
        if owner is None:
            ok3 = False
            continue
        touched = {x for e in F for x in e} - {owner.root}
        if owner.side == LEFT and touched and max(touched) > owner.root:
            ok3 = False
        if owner.side == RIGHT and touched and min(touched) < owner.root:
            ok3 = False
    if not ok3:
        bad.append(3)

    if any(
        x in I or G.neighbors_in(x, I.lo, I.hi) for t in T.trees for x in t.parent
    ):
        bad.append(4)

    ok5 = True
    for tree in T.trees:
        for x, par in tree.parent.items():
            if tree.side == LEFT:
                below = G.neighbors_in(x, 1, I.lo - 1)
                ok5 &= bool(below) and below[-1] == par
            else:
                above = G.neighbors_in(x, I.hi + 1, G.n)
                ok5 &= bool(above) and above[0] == par
    if not ok5:
        bad.append(5)

    if all(G.neighbors_in(r, I.lo, I.hi) for r in T.roots()):
        bad.append(6)
    return bad


# -- monochromatic interval and the k-vertex gap lemma ----------------------------------


def _edge_color(c: EdgeColoring, a: int, b: int) -> int:
    return c.color[(a, b) if a < b else (b, a)]


def _mono(
    G: OrderedGraph,
    c: EdgeColoring,
    I: Interval,
    xs: Sequence[int],
    palette: list[int],
    g: int,
) -> tuple[Interval, dict[int, int]] | None:
    if len(xs) == 1:
        return I, {xs[0]: palette[0]}
    k = len(xs)
    x = xs[-1]
    parts = blocks(I, g)
    p = len(parts)
    e = []
    for part in parts:
        hits = G.neighbors_in(x, part.lo, part.hi)
        assert hits, f"{x} misses a block of {g} vertices"
        e.append(_edge_color(c, x, hits[0]))
    pair = None
    for a in range(p):
        for b in range(p - 1, a, -1):
            if e[b] == e[a]:
                if (b - a + 1) * k >= p:
                    pair = (a, b)
                break
        if pair:
            break
    if pair is None or pair[1] == pair[0] + 1:
        return None
    a, b = pair
    col = e[a]
    inner = Interval(parts[a + 1].lo, parts[b - 1].hi)
    sub = _mono(G, c, inner, xs[:-1], [q for q in palette if q != col], g)
    if sub is None:
        return None
    J, assign = sub
    if J.size <= 2 * g:
        return None
    assign[x] = col
    return Interval(J.lo + g, J.hi - g), assign


def mono_interval(
    G: OrderedGraph, c: EdgeColoring, I: Interval, xs: Sequence[int], g: int
) -> tuple[Interval, tuple[int, ...]] | None:
    """A sub-interval where each ``x`` reaches in with a single colour of its own.

    Every ``x`` must hit every block of ``g`` consecutive vertices of ``I``.
    Returns ``(J, colours)`` where ``colours[i]`` is the only colour on edges
    from ``xs[i]`` into ``J``, and ``|J| >= |I|/k! - 5kg``; ``None`` when that
    bound is not positive (``k = 1`` always returns ``I`` itself).
    """
    k = len(xs)
    if k < 1 or len(set(xs)) != k:
        raise ValueError("need distinct vertices")
    if g < 1:
        raise ValueError("g must be positive")
    for x in xs:
        if x in I:
            raise ValueError(f"{x} lies in {I}")
        run, _ = max_unhit_run(G, x, I)
        if run >= g:
            raise ValueError(f"{x} leaves {run} consecutive vertices of {I} unhit (g={g})")
    bound = I.size / math.factorial(k) - 5 * k * g
    if k > 1 and bound <= 0:
        return None
    seen = sorted(
        {_edge_color(c, x, y) for x in xs for y in G.neighbors_in(x, I.lo, I.hi)}
    )
    if len(seen) > k:
        raise ValueError(f"{len(seen)} colours reach {I} from {k} vertices")
    palette = seen + [q for q in range(1, c.k + k + 1) if q not in seen][: k - len(seen)]
    res = _mono(G, c, I, list(xs), palette, g)
    assert res is not None, "construction failed although the bound is positive"
    J, assign = res
    assert J.size >= bound or k == 1, (J.size, bound)
    for x in xs:
        assert all(
            _edge_color(c, x, y) == assign[x] for y in G.neighbors_in(x, J.lo, J.hi)
        ), f"edges from {x} into {J} are not monochromatic"
    return J, tuple(assign[x] for x in xs)


def path_bound(size: int, g: int, k: int) -> int:
    """Size the k-vertex gap lemma certifies for the path branch (0 if vacuous)."""
    return max(0, math.floor(size / (g * math.factorial(k)) - 5 * k - 1))


def gap_k_or_path(
    G: OrderedGraph, c: EdgeColoring, I: Interval, xs: Sequence[int], g: int
) -> VertexPath | tuple[int, Interval]:
    """First ``x`` leaving ``g`` consecutive vertices of ``I`` unhit, or a path across ``I``.

    The path crosses the monochromatic sub-interval block by block; if that
    sub-interval is not available (the certified size is not positive) the
    shortest increasing path over ``I`` is returned instead.
    """
    if len(set(xs)) != len(xs) or any(x in I for x in xs):
        raise ValueError("need distinct vertices outside I")
    for x in xs:
        run, witness = max_unhit_run(G, x, I)
        if run >= g:
            return x, witness
    mono = mono_interval(G, c, I, xs, g)
    if mono is None:
        path = shortest_increasing_path(G, I.lo, I.hi)
        assert path is not None
        return path
    J, _ = mono
    parts = blocks(J, g)
    path = shortest_increasing_path(G, parts[0].lo, parts[-1].hi)
    assert path is not None and len(path) >= len(parts), (path, len(parts))
    return path


# -- growth ----------------------------------------------------------------------------


def grow_surrounding(
    G: OrderedGraph, c: EdgeColoring, T: TreeSurrounding, g: int
) -> VertexPath | TreeSurrounding:
    """One growth step: a path across ``I`` or a surrounding with one more tree vertex."""
    if g < 1:
        raise ValueError("g must be positive")
    I, p = T.I, T.p
    free = [
        (t.root, side, idx)
        for side, trees in ((LEFT, T.left), (RIGHT, T.right))
        for idx, t in enumerate(trees)
        if not G.neighbors_in(t.root, I.lo, I.hi)
    ]
    if not free:
        raise ValueError("no root avoids the interval")
    u, side, a = min(free)
    left, right = list(T.left), list(T.right)
    J = I
    if side == LEFT:
        v = G.neighbors_in(u, 1, I.lo - 1)[-1]
        assert v > u
        col = a + 1
        owner = next((b for b, t in enumerate(left) if v in t.nodes), None)
        if owner is None:
            left[a] = left[a].hang_under(v, col)
        else:
            fresh = max(x for t in left for x in t.nodes) + 1
            if I.size < 2:
                raise Degenerate(f"merge step at {u}->{v} leaves no interval past {I.lo}")
            J = Interval(I.lo + 1, I.hi)
            if fresh >= J.lo or any(fresh in t.nodes for t in T.trees):
                raise Degenerate(f"fresh left root {fresh} collides with {J} or a tree")
            left[owner] = left[a].hang_under(v, col, onto=left[owner])
            left[a] = ColoredTree.singleton(fresh, LEFT)
    else:
        v = G.neighbors_in(u, I.hi + 1, G.n)[0]
        assert v < u
        col = p + a + 1
        owner = next((b for b, t in enumerate(right) if v in t.nodes), None)
        if owner is None:
            right[a] = right[a].hang_under(v, col)
        else:
            fresh = min(x for t in right for x in t.nodes) - 1
            if I.size < 2:
                raise Degenerate(f"merge step at {u}->{v} leaves no interval before {I.hi}")
            J = Interval(I.lo, I.hi - 1)
            if fresh <= J.hi or any(fresh in t.nodes for t in T.trees):
                raise Degenerate(f"fresh right root {fresh} collides with {J} or a tree")
            right[owner] = right[a].hang_under(v, col, onto=right[owner])
            right[a] = ColoredTree.singleton(fresh, RIGHT)
    roots = sorted(t.root for t in (*left, *right))
    res = gap_k_or_path(G, c, J, roots, g)
    if isinstance(res, VertexPath):
        return res
    _, W = res
    new = TreeSurrounding(tuple(left), W, tuple(right))
    assert new.total_size == T.total_size + 1
    assert W.size >= g and I.lo <= W.lo and W.hi <= I.hi
    violated = verify_surrounding(G, c, new)
    assert not violated, f"surrounding conditions {violated} fail after step"
    return new


def _schedule(n: int, t: int) -> int:
    return math.floor(n / (2 * math.log2(n) ** (t + 1)))


def _tree_candidates(T: TreeSurrounding, G: OrderedGraph) -> list[tuple[ColoredTree, VertexPath]]:
    out = []
    p, q = T.p, T.k - T.p
    for tree in T.trees:
        path = tree.deepest_path()
        assert verify_induced_increasing(G, path), f"root-to-leaf path {path} is not induced"
        colors = p if tree.side == LEFT else q
        assert tree.size <= tree_size_bound(tree.depth, colors)
        assert tree.depth > depth_lower_bound(tree.size, colors) - 1
        out.append((tree, path))
    return out


def extract_knc(
    G: OrderedGraph,
    c: EdgeColoring,
    k: int,
    exhaust: bool = False,
    check: bool = True,
    observer: Callable[[int, TreeSurrounding], None] | None = None,
) -> PathReport:
    """Grow a tree-surrounding and read off a deep root-to-leaf path.

    The interval target after step ``t`` is ``n / (2 log2(n)^(t+1))``; the run
    stops once it drops below one.  With ``exhaust=True`` the target is held
    at one instead and growth continues until a path branch fires or a merge
    step has nowhere to put its fresh root.  ``observer(t, S)`` sees every
    surrounding as it is produced.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not G.has_increasing_ham_path:
        raise ValueError("graph has no increasing Hamiltonian path")
    if check and (not verify_partition(G, c) or any(col > k for col in c.used_colors())):
        raise ValueError(f"colouring is not a {k}-class non-crossing partition")
    n = G.n
    p = math.ceil(k / 2)
    lift = shortest_increasing_path(G, 1, n)
    assert lift is not None
    if n < k + 2 or n < 2 or _schedule(n, 0) < 1:
        return PathReport(n, lift, "lifting", trace=[(0, n, 0, "small")])

    candidates: list[tuple[str, VertexPath, int]] = [("lifting", lift, 1)]
    trace: list[tuple] = []
    surrounding_trace: list[dict] = []
    degenerate = None

    I0 = Interval(p + 1, n - (k - p))
    g = _schedule(n, 0)
    T = initial_surrounding(n, k, I0)
    res = gap_k_or_path(G, c, I0, sorted(T.roots()), g)
    t = 0
    if isinstance(res, VertexPath):
        trace.append((0, I0.size, g, "path"))
        candidates.append(("gap-shortcut", res, path_bound(I0.size, g, k)))
        S = None
    else:
        trace.append((0, I0.size, g, "gap"))
        S = replace(T, I=res[1])
        assert not verify_surrounding(G, c, S)
        surrounding_trace.append({"step": 0, "sizes": S.sizes(), "interval": S.I.size})
        if observer:
            observer(0, S)
        t = 1
        while True:
            g = _schedule(n, t)
            if g < 1:
                if not exhaust:
                    break
                g = 1
            try:
                nxt = grow_surrounding(G, c, S, g)
            except Degenerate as exc:
                degenerate = str(exc)
                if not exhaust:
                    partial = _finish(G, n, k, t, S, candidates, trace, surrounding_trace, exc)
                    raise Degenerate(str(exc), partial) from None
                break
            if isinstance(nxt, VertexPath):
                trace.append((t, S.I.size, g, "path"))
                candidates.append(("gap-shortcut", nxt, path_bound(S.I.size, g, k)))
                break
            trace.append((t, S.I.size, g, "grow"))
            S = nxt
            surrounding_trace.append({"step": t, "sizes": S.sizes(), "interval": S.I.size})
            if observer:
                observer(t, S)
            t += 1
    return _finish(G, n, k, t, S, candidates, trace, surrounding_trace, degenerate)


def _finish(G, n, k, t, S, candidates, trace, surrounding_trace, degenerate) -> PathReport:
    candidates = list(candidates)
    p = math.ceil(k / 2)
    if S is not None:
        trees = _tree_candidates(S, G)
        largest, _ = max(trees, key=lambda tp: tp[0].size)
        assert largest.size * k >= S.total_size
        for tree, path in trees:
            colors = p if tree.side == LEFT else k - p
            candidates.append(("tree", path, certified_depth(tree.size, colors)))
    method, best, _ = max(candidates, key=lambda m: len(m[1]))
    assert verify_induced_increasing(G, best)
    guarantee = max(bound for _, _, bound in candidates)
    report = PathReport(n, best, method, iterations=max(t - 1, 0), guarantee=guarantee, trace=trace)
    report.extra["surrounding_trace"] = surrounding_trace
    if degenerate is not None:
        report.extra["degenerate"] = str(degenerate)
    return report
