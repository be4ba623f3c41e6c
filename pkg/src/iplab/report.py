from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .core import OrderedGraph, VertexPath, verify_induced_increasing

METHODS = ("gap-shortcut", "triple-loop", "lifting", "oracle", "tree")


@dataclass
class PathReport:
    """Outcome of one extractor run."""

    n: int
    path: VertexPath
    method: str
    iterations: int = 0
    guarantee: int = 0
    trace: list[tuple] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if len(self.path) < self.guarantee:
            raise AssertionError(
                f"path of size {len(self.path)} below certified {self.guarantee}"
            )

    @property
    def length(self) -> int:
        return len(self.path)

    def verify(self, G: OrderedGraph) -> bool:
        return G.n == self.n and verify_induced_increasing(G, self.path)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "n": self.n,
            "method": self.method,
            "path": list(self.path.seq),
            "length": self.length,
            "guarantee": self.guarantee,
            "iterations": self.iterations,
            "trace": [list(t) for t in self.trace],
        }
        out.update(self.extra)
        return out
