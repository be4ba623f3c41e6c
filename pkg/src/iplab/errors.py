"""Exceptions raised by the extractors and file readers."""

from __future__ import annotations

from typing import Any


class FormatError(ValueError):
    """Malformed ``.og`` / ``.ogc`` input."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NotTwoPartitionable(ValueError):
    """The edges cannot be split into two non-crossing classes.

    ``cycle`` is an odd cycle of pairwise consecutive crossing edges, in the
    coordinates of the graph that was partitioned.
    """

    def __init__(self, cycle: list[tuple[int, int]], offset: int = 0) -> None:
        self.cycle = [(a + offset, b + offset) for a, b in cycle]
        super().__init__(f"odd crossing cycle of length {len(self.cycle)}: {self.cycle}")


class AllIntervalsFailed(ValueError):
    """Every interval of the genus split failed to partition into two classes."""


class Degenerate(RuntimeError):
    """A tree-surrounding step could not place its fresh root.

    ``report`` carries the best path found before the step.
    """

    def __init__(self, message: str, report: Any = None) -> None:
        self.report = report
        super().__init__(message)
