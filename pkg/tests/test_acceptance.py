"""The ten acceptance criteria, one test each.

Every test prints a single ``ACCEPTANCE <i> PASS|FAIL`` line to the terminal
(bypassing capture) before asserting, so ``pytest tests/test_acceptance.py``
doubles as a readable report.
"""

from __future__ import annotations

import os
import subprocess
import sys
import time
from itertools import product
from math import comb
from pathlib import Path

import pytest

from conftest import extremal_corpus, random_corpus
from iplab.core import OrderedGraph, cutwidth_of_edges, verify_induced_increasing
from iplab.corpus import random_knc
from iplab.errors import AllIntervalsFailed, Degenerate
from iplab.extract2 import extract_2nc, extract_genus, extract_planar
from iplab.extractk import ColoredTree, LEFT, extract_knc, tree_size_bound, verify_surrounding
from iplab.extremal import build_g, build_u, expected_size
from iplab.noncross import EdgeColoring, two_partition, verify_partition
from iplab.oracle import longest_increasing_induced_path, longest_induced_path
from iplab.report import PathReport

Instance = tuple[str, OrderedGraph, EdgeColoring, int]


@pytest.fixture
def report(capsys):
    def emit(idx: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {idx} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


def _corpus() -> list[Instance]:
    out: list[Instance] = []
    for inst in extremal_corpus():
        out.append((inst.name, inst.graph, inst.coloring, inst.coloring.k))
    for i, (G, c) in enumerate(random_corpus(60, k=2, max_n=160)):
        out.append((f"rand2-{i}", G, c, 2))
    for k in range(3, 7):
        for i, (G, c) in enumerate(random_corpus(15, k=k, max_n=200, seed0=1000 * k)):
            out.append((f"rand{k}-{i}", G, c, k))
    return out


CORPUS = _corpus()


def _runs(G: OrderedGraph, c: EdgeColoring, k: int, **kw) -> list[tuple[str, PathReport]]:
    """Every extractor that accepts this instance, with its report."""
    runs: list[tuple[str, PathReport]] = []
    two = two_partition(G)
    if two is not None:
        runs.append(("planar", extract_planar(G)))
        if G.n >= 8:
            runs.append(("2nc", extract_2nc(G, two, **kw)))
    for exhaust in (False, True):
        try:
            runs.append((f"knc{'-x' if exhaust else ''}", extract_knc(G, c, k, exhaust=exhaust, **kw)))
        except Degenerate as exc:
            runs.append(("knc-partial", exc.report))
    for genus in (0, 1, 2):
        if G.n >= 2 * (genus + 1):
            try:
                runs.append((f"genus{genus}", extract_genus(G, genus)))
            except AllIntervalsFailed:
                pass
    return runs


def test_1_size_formula(report):
    start = time.perf_counter()
    bad = []
    for k, p in product(range(3), repeat=2):
        n = build_g(k, p).n
        if n != 2 ** comb(k + p + 1, p) + 1 or n != expected_size(k, p):
            bad.append((k, p, n))
    pinned = {(1, 1): 9, (2, 1): 17, (1, 2): 65, (2, 2): 1025}
    bad += [(k, p, build_g(k, p).n) for (k, p), n in pinned.items() if build_g(k, p).n != n]
    elapsed = time.perf_counter() - start
    report(1, not bad and elapsed < 1.0, f"9 sizes exact, mismatches={bad}, {elapsed:.2f}s (< 1 s)")


def _g_grid() -> list[tuple[int, int]]:
    # 2^19 + 1 <= 10^6 < 2^20 + 1
    return [(k, p) for k in range(7) for p in range(25) if comb(k + p + 1, p) <= 19]


def test_2_certificates(report):
    start = time.perf_counter()
    bad = []
    for p in range(17):
        inst = build_u(p)
        if not verify_partition(inst.graph, inst.coloring) or inst.coloring.k != 1:
            bad.append(inst.name)
    grid = _g_grid()
    for k, p in grid:
        inst = build_g(k, p)
        if not (inst.n <= 10**6 and verify_partition(inst.graph, inst.coloring) and inst.coloring.k <= 2 * k + 1):
            bad.append(inst.name)
    elapsed = time.perf_counter() - start
    report(
        2,
        not bad and elapsed < 30.0,
        f"U_0..U_16 and {len(grid)} G(k,p) with k <= 6, n <= 10^6; failures={bad}; {elapsed:.1f}s (< 30 s)",
    )


def test_3_oracle_upper_bounds(report):
    start = time.perf_counter()
    sizes, bad = {}, []
    for p in range(5):
        res = longest_induced_path(build_u(p).graph)
        sizes[f"U_{p}"] = len(res)
        if not res.optimal or len(res) > 2 * p + 2:
            bad.append(f"U_{p}")
    g11 = longest_induced_path(build_g(1, 1).graph)
    sizes["G(1,1)"] = len(g11)
    ok = not bad and sizes["U_2"] == 4 and g11.optimal and len(g11) <= 8
    elapsed = time.perf_counter() - start
    report(3, ok and elapsed < 300, f"optima {sizes}; U_2 == 4; G(1,1) <= 8; {elapsed:.1f}s (< 5 min)")


def test_4_extractor_validity(report):
    bad, count = [], 0
    for name, G, c, k in CORPUS:
        for ext, rep in _runs(G, c, k):
            count += 1
            if not (rep.n == G.n and verify_induced_increasing(G, rep.path)):
                bad.append((name, ext))
    report(4, not bad, f"{count} emitted paths over {len(CORPUS)} instances; invalid={bad}")


def _small_instances() -> list[Instance]:
    out: list[Instance] = []
    for s in range(200):
        n = 2 + s % 17
        G, c = random_knc(n, 2, seed=50_000 + s)
        out.append((f"small-{s}", G, c, 2))
    for p in range(5):
        inst = build_u(p)
        out.append((inst.name, inst.graph, inst.coloring, 1))
    for k, p in product(range(7), range(5)):
        if comb(k + p + 1, p) <= 4:
            inst = build_g(k, p)
            out.append((inst.name, inst.graph, inst.coloring, inst.coloring.k))
    return [inst for inst in out if inst[1].n <= 18]


def test_5_extractor_vs_oracle(report):
    bad, count = [], 0
    instances = _small_instances()
    for name, G, c, k in instances:
        opt = longest_increasing_induced_path(G)
        assert opt.optimal
        for ext, rep in _runs(G, c, k):
            count += 1
            if rep.length > len(opt):
                bad.append((name, ext, rep.length, len(opt)))
    report(5, not bad, f"{count} runs over {len(instances)} instances with n <= 18; above optimum={bad}")


def _produced_by(trace: list[tuple], kinds: tuple[str, ...]) -> dict[int, int]:
    """Step index -> target g of the gap that produced that step's interval."""
    return {t: g for t, _, g, kind in trace if kind in kinds}


def test_6_growth_accounting(report):
    bad, steps = [], 0
    for name, G, c, k in CORPUS:
        two = two_partition(G)
        if two is not None and G.n >= 8:
            seen: list[tuple[int, int, int]] = []
            rep = extract_2nc(G, two, observer=lambda t, T: seen.append((t, len(T.L) + len(T.R), T.I.size)))
            targets = _produced_by(rep.trace, ("gap-u", "gap-v"))
            for (_, a, _), (_, b, _) in zip(seen, seen[1:]):
                bad += [(name, "2nc", "flank")] if b != a + 1 else []
            bad += [(name, "2nc", "interval", t) for t, _, size in seen if size < targets[t]]
            steps += len(seen)
        for exhaust in (False, True):
            seen = []
            rep = extract_knc(G, c, k, exhaust=exhaust, observer=lambda t, S: seen.append((t, S.total_size, S.I.size)))
            targets = _produced_by(rep.trace, ("gap", "grow"))
            for (_, a, _), (_, b, _) in zip(seen, seen[1:]):
                bad += [(name, "knc", "trees")] if b != a + 1 else []
            bad += [(name, "knc", "interval", t) for t, _, size in seen if size < targets[t]]
            steps += len(seen)
    report(6, not bad, f"{steps} observed steps; every step +1 and |I_(t+1)| >= g_t; violations={bad[:5]}")


def _parent_arrays(n: int):
    """Parent arrays with parent(i) in i+1..n: every tree on n nodes with every compatible order."""
    yield from product(*[range(i + 1, n + 1) for i in range(1, n)])


def test_7_tree_bound_exhaustive(report):
    start = time.perf_counter()
    checked, bad = 0, []
    for n in range(1, 9):
        for parents in _parent_arrays(n):
            parent = {i: parents[i - 1] for i in range(1, n)}
            T = ColoredTree(n, LEFT, parent, dict.fromkeys(parent, 1))
            cw = cutwidth_of_edges(n, list(parent.items()))
            checked += 1
            if n > tree_size_bound(T.depth, cw):
                bad.append((n, parents))
    elapsed = time.perf_counter() - start
    report(7, not bad and elapsed < 120, f"{checked} ordered trees on <= 8 nodes; violations={bad[:3]}; {elapsed:.1f}s (< 2 min)")


def test_8_surrounding_conditions(report):
    bad, steps = [], 0
    for name, G, c, k in CORPUS:
        for exhaust in (False, True):
            seen = []
            extract_knc(G, c, k, exhaust=exhaust, observer=lambda t, S: seen.append((t, S)))
            for t, S in seen:
                steps += 1
                viol = verify_surrounding(G, c, S)
                if viol:
                    bad.append((name, exhaust, t, viol))
    report(8, not bad, f"{steps} surroundings checked across {len(CORPUS)} instances; violations={bad[:5]}")


def test_9_asymptotic_trend(report):
    start = time.perf_counter()
    same = all(build_u(p + 1).graph.edges == build_g(0, p).graph.edges for p in range(1, 11))
    lengths, guarantees, valid = [], [], True
    for p in range(2, 20):
        inst = build_u(p + 1)
        c = EdgeColoring(2, inst.coloring.color)
        rep = extract_2nc(inst.graph, c, check=p <= 12)
        valid &= rep.verify(inst.graph) and rep.guarantee == rep.iterations // 2
        lengths.append(rep.length)
        guarantees.append(rep.guarantee)
    elapsed = time.perf_counter() - start
    ok = (
        same
        and valid
        and all(a <= b for a, b in zip(lengths, lengths[1:]))
        and all(a <= b for a, b in zip(guarantees, guarantees[1:]))
        and guarantees[-1] > guarantees[0]
        and elapsed < 300
    )
    report(9, ok, f"G(0,p) for p=2..19: lengths {lengths}, guarantees {guarantees}; {elapsed:.1f}s (< 5 min)")


CLI_COMMANDS = [
    ["gen", "up", "6", "--out", "in"],
    ["gen", "gkp", "1", "1", "--out", "in"],
    ["gen", "rand", "40", "--k", "3", "--seed", "7", "--out", "in"],
    ["check", "in/gkp_1_1.og", "--colors", "in/gkp_1_1.ogc"],
    ["check", "in/rand_n40_k3_s7.og", "--k", "3"],
    ["extract", "planar", "in/up6.og", "--out", "out/planar.json"],
    ["extract", "2nc", "in/up6.og", "--colors", "in/up6.ogc"],
    ["extract", "knc", "in/gkp_1_1.og", "--colors", "in/gkp_1_1.ogc", "--k", "3"],
    ["extract", "knc", "in/rand_n40_k3_s7.og", "--colors", "in/rand_n40_k3_s7.ogc", "--k", "3", "--exhaust"],
    ["extract", "genus", "in/up6.og", "--genus", "1"],
    ["oracle", "in/gkp_1_1.og"],
    ["oracle", "in/up6.og", "--increasing"],
    ["export-arcs", "in/gkp_1_1.og", "--colors", "in/gkp_1_1.ogc", "--out", "out/arcs.svg"],
    ["bench", "--family", "G", "--k", "0..1", "--p", "0..2", "--extractor", "knc", "--jobs", "2", "--out", "out/bench"],
]


def _cli_session(root: Path, hash_seed: str) -> list[tuple[int, bytes, bytes]]:
    """Run every command in a fresh interpreter under ``root``."""
    root.mkdir()
    env = {**os.environ, "PYTHONHASHSEED": hash_seed}
    results = []
    for argv in CLI_COMMANDS:
        proc = subprocess.run(
            [sys.executable, "-m", "iplab.cli", *argv], cwd=root, env=env, capture_output=True, check=False
        )
        results.append((proc.returncode, proc.stdout, proc.stderr))
    files = sorted(p for p in root.rglob("*") if p.is_file())
    results.append((0, "\n".join(str(p.relative_to(root)) for p in files).encode(), b""))
    results += [(0, p.read_bytes(), b"") for p in files]
    return results


def test_10_cli_determinism(report, tmp_path):
    first = _cli_session(tmp_path / "a", "1")
    second = _cli_session(tmp_path / "b", "2")
    codes = [code for code, _, _ in first[: len(CLI_COMMANDS)]]
    diff = [CLI_COMMANDS[i][:2] for i, (a, b) in enumerate(zip(first, second)) if a != b and i < len(CLI_COMMANDS)]
    files_equal = first[len(CLI_COMMANDS):] == second[len(CLI_COMMANDS):]
    ok = all(code == 0 for code in codes) and not diff and files_equal
    report(
        10,
        ok,
        f"{len(CLI_COMMANDS)} commands run twice in separate interpreters with different hash seeds; "
        f"exit codes {sorted(set(codes))}; differing stdout={diff}; output files identical={files_equal}",
    )
