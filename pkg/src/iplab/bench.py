"""Parameter sweeps over the extremal families."""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor, TimeoutError as FutureTimeout
from dataclasses import asdict, dataclass

from .extract2 import extract_2nc, extract_planar
from .extractk import extract_knc
from .extremal import LabeledInstance, build_g, build_u
from .noncross import EdgeColoring
from .oracle import longest_increasing_induced_path

EXTRACTORS = ("2nc", "knc", "planar")
COLUMNS = ("family", "k", "p", "n", "m", "length", "guarantee", "method", "oracle", "upper_bound", "status", "time_ms")


@dataclass(frozen=True)
class BenchRow:
    family: str
    k: int
    p: int
    n: int = 0
    m: int = 0
    length: int | None = None
    guarantee: int | None = None
    method: str = ""
    oracle: int | None = None
    upper_bound: int | None = None
    status: str = "ok"
    time_ms: float | None = None


def _instance(family: str, k: int, p: int) -> LabeledInstance:
    return build_u(p) if family == "U" else build_g(k, p)


def run_one(
    family: str, k: int, p: int, extractor: str, oracle_max: int = 18, budget: int | None = None
) -> BenchRow:
    t0 = time.perf_counter()
    try:
        inst = _instance(family, k, p)
    except (ValueError, OverflowError) as exc:
        return BenchRow(family, k, p, status=f"skipped: {exc}")
    G, c = inst.graph, inst.coloring
    try:
        if extractor == "2nc":
            # the 1-colour certificates of U_p and G(0, p) are valid 2-partitions
            if c.k > 2:
                raise ValueError(f"{inst.name} needs {c.k} colours")
            report = extract_2nc(G, EdgeColoring(2, c.color), check=G.n <= 1 << 12)
        elif extractor == "planar":
            report = extract_planar(G)
        elif extractor == "knc":
            report = extract_knc(G, c, c.k, check=G.n <= 1 << 12)
        else:
            raise ValueError(f"unknown extractor {extractor!r}")
    except ValueError as exc:
        return BenchRow(family, k, p, G.n, G.m, status=f"skipped: {exc}")
    except RuntimeError as exc:
        return BenchRow(family, k, p, G.n, G.m, status=f"degenerate: {exc}")
    assert report.verify(G)
    oracle = None
    if G.n <= oracle_max:
        res = longest_increasing_induced_path(G, budget)
        oracle = len(res) if res.optimal else None
    return BenchRow(
        family, k, p, G.n, G.m, report.length, report.guarantee, report.method,
        oracle, inst.upper_bound(), "ok", round((time.perf_counter() - t0) * 1000, 3),
    )


def _call(args: tuple) -> BenchRow:
    return run_one(*args)


def run_grid(
    family: str,
    ks: list[int],
    ps: list[int],
    extractor: str,
    oracle_max: int = 18,
    jobs: int = 1,
    timeout: float | None = None,
) -> list[BenchRow]:
    """One row per ``(k, p)``, sorted by ``(k, p)`` whatever order workers finish in."""
    if family not in ("U", "G"):
        raise ValueError("family must be 'U' or 'G'")
    grid = [(family, 0 if family == "U" else k, p) for k in (ks if family == "G" else [0]) for p in ps]
    tasks = [(f, k, p, extractor, oracle_max) for f, k, p in grid]
    if jobs <= 1:
        rows = [_call(t) for t in tasks]
    else:
        rows = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [(t, pool.submit(_call, t)) for t in tasks]
            for t, fut in futures:
                try:
                    rows.append(fut.result(timeout=timeout))
                except FutureTimeout:
                    rows.append(BenchRow(t[0], t[1], t[2], status="timeout"))
    return sorted(rows, key=lambda r: (r.k, r.p))


def rows_to_csv(rows: list[BenchRow], timing: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in rows:
        d = asdict(r)
        if not timing:
            d["time_ms"] = None
        writer.writerow(["" if d[col] is None else d[col] for col in COLUMNS])
    return buf.getvalue()


def rows_to_records(rows: list[BenchRow], timing: bool = False) -> list[dict]:
    out = []
    for r in rows:
        d = asdict(r)
        if not timing:
            d["time_ms"] = None
        out.append(d)
    return out
