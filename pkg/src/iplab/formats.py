"""Plain-text graph (``.og``) and colouring (``.ogc``) files, 1-based.

.og::

    og <n> <m>
    <u> <v>        # m lines, 1 <= u < v <= n

.ogc::

    ogc <n> <m> <k>
    <u> <v> <c>    # m lines, same edge set as the .og file

Blank lines and everything after ``#`` are ignored.
"""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

from .core import Edge, OrderedGraph
from .errors import FormatError
from .noncross import EdgeColoring


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield lineno, body


def _ints(fields: list[str], count: int, lineno: int) -> list[int]:
    if len(fields) != count:
        raise FormatError(f"expected {count} fields, got {len(fields)}", lineno)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"non-integer field in {' '.join(fields)!r}", lineno) from None


def _header(lines: Iterator[tuple[int, list[str]]], magic: str, count: int) -> tuple[int, list[int]]:
    try:
        lineno, fields = next(lines)
    except StopIteration:
        raise FormatError(f"missing '{magic}' header", 1) from None
    if fields[0] != magic:
        raise FormatError(f"expected '{magic}' header, got {fields[0]!r}", lineno)
    vals = _ints(fields[1:], count, lineno)
    if any(v < 0 for v in vals):
        raise FormatError("negative header value", lineno)
    return lineno, vals


def _edge(u: int, v: int, n: int, lineno: int) -> Edge:
    if not (1 <= u < v <= n):
        raise FormatError(f"edge {u} {v} needs 1 <= u < v <= {n}", lineno)
    return (u, v)


def parse_og(text: str, add_path: bool = False) -> OrderedGraph:
    """Parse ``.og`` text.  ``add_path`` adds any missing ``(i, i+1)`` edges."""
    lines = _lines(text)
    lineno, (n, m) = _header(lines, "og", 2)
    if n < 1:
        raise FormatError("graph needs at least one vertex", lineno)
    edges: set[Edge] = set()
    for lineno, fields in lines:
        e = _edge(*_ints(fields, 2, lineno), n, lineno)
        if e in edges:
            raise FormatError(f"duplicate edge {e[0]} {e[1]}", lineno)
        edges.add(e)
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}", lineno)
    if add_path:
        edges.update((i, i + 1) for i in range(1, n))
    return OrderedGraph(n, edges)


def parse_ogc(text: str, G: OrderedGraph | None = None) -> EdgeColoring:
    """Parse ``.ogc`` text, checking it against ``G`` when given."""
    lines = _lines(text)
    lineno, (n, m, k) = _header(lines, "ogc", 3)
    if k < 1:
        raise FormatError("k must be positive", lineno)
    if G is not None and (n, m) != (G.n, G.m):
        raise FormatError(f"header ({n}, {m}) does not match graph ({G.n}, {G.m})", lineno)
    color: dict[Edge, int] = {}
    for lineno, fields in lines:
        u, v, c = _ints(fields, 3, lineno)
        e = _edge(u, v, n, lineno)
        if e in color:
            raise FormatError(f"duplicate edge {u} {v}", lineno)
        if not 1 <= c <= k:
            raise FormatError(f"colour {c} outside 1..{k}", lineno)
        if G is not None and not G.has_edge(u, v):
            raise FormatError(f"edge {u} {v} is not in the graph", lineno)
        color[e] = c
    if len(color) != m:
        raise FormatError(f"header announces {m} edges, found {len(color)}", lineno)
    return EdgeColoring(k, color)


def format_og(G: OrderedGraph) -> str:
    out = [f"og {G.n} {G.m}"]
    out.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(out) + "\n"


def format_ogc(G: OrderedGraph, c: EdgeColoring) -> str:
    out = [f"ogc {G.n} {G.m} {c.k}"]
    out.extend(f"{u} {v} {c[(u, v)]}" for u, v in G.edges)
    return "\n".join(out) + "\n"


def read_og(path: str | Path, add_path: bool = False) -> OrderedGraph:
    return parse_og(Path(path).read_text(), add_path=add_path)


def read_ogc(path: str | Path, G: OrderedGraph | None = None) -> EdgeColoring:
    return parse_ogc(Path(path).read_text(), G)


def write_og(path: str | Path, G: OrderedGraph) -> None:
    Path(path).write_text(format_og(G))


def write_ogc(path: str | Path, G: OrderedGraph, c: EdgeColoring) -> None:
    Path(path).write_text(format_ogc(G, c))
