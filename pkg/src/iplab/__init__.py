"""Increasing induced paths in ordered graphs with non-crossing edge partitions."""

from __future__ import annotations

__version__ = "0.1.0"

from .core import Interval, OrderedGraph, VertexPath, path_graph, shortest_increasing_path
from .errors import AllIntervalsFailed, Degenerate, FormatError, NotTwoPartitionable
from .extract2 import extract_2nc, extract_genus, extract_planar
from .extractk import extract_knc
from .extremal import build_g, build_u
from .noncross import EdgeColoring, k_partition, two_partition, verify_partition
from .oracle import longest_increasing_induced_path, longest_induced_path
from .report import PathReport

__all__ = [
    "AllIntervalsFailed",
    "Degenerate",
    "EdgeColoring",
    "FormatError",
    "Interval",
    "NotTwoPartitionable",
    "OrderedGraph",
    "PathReport",
    "VertexPath",
    "build_g",
    "build_u",
    "extract_2nc",
    "extract_genus",
    "extract_knc",
    "extract_planar",
    "k_partition",
    "longest_increasing_induced_path",
    "longest_induced_path",
    "path_graph",
    "shortest_increasing_path",
    "two_partition",
    "verify_partition",
]
