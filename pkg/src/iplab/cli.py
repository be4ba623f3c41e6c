"""``iplab`` command-line front end.

Exit codes: 0 success, 2 validation failure, 3 extractor degenerate,
4 format error.  JSON is written with sorted keys so that reruns with the
same inputs and parameters are byte-identical; wall-clock fields appear only
with ``--timing``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .bench import EXTRACTORS, rows_to_csv, rows_to_records, run_grid
from .core import OrderedGraph
from .corpus import random_knc
from .errors import AllIntervalsFailed, Degenerate, FormatError, NotTwoPartitionable
from .extract2 import extract_2nc, extract_genus, extract_planar
from .extractk import extract_knc
from .extremal import build_g, build_u
from .formats import read_og, read_ogc, write_og, write_ogc
from .noncross import DEFAULT_EXACT_THRESHOLD, EdgeColoring, crossing_violations, k_partition, verify_partition
from .oracle import default_budget, longest_increasing_induced_path, longest_induced_path
from .svg import arc_svg

OK, INVALID, DEGENERATE, BAD_FORMAT = 0, 2, 3, 4


class CliFailure(Exception):
    def __init__(self, code: int, message: str, payload: dict | None = None) -> None:
        super().__init__(message)
        self.code = code
        self.payload = payload


def _digest(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def manifest(
    command: str, inputs: list[str], params: dict[str, Any], outputs: list[str], seed: int | None = None
) -> dict[str, Any]:
    return {
        "command": command,
        "inputs": [{"path": p, "sha256": _digest(p)} for p in inputs],
        "parameters": params,
        "seed": seed,
        "version": __version__,
        "outputs": outputs,
    }


def _dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(obj: Any, out: str | None) -> None:
    text = _dumps(obj)
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(args: argparse.Namespace) -> tuple[OrderedGraph, EdgeColoring | None, list[str]]:
    G = read_og(args.file, add_path=getattr(args, "add_path", False))
    inputs = [args.file]
    c = None
    if getattr(args, "colors", None):
        c = read_ogc(args.colors, G)
        inputs.append(args.colors)
    return G, c, inputs


# -- gen -------------------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "up":
        inst = build_u(args.p)
        stem, params = f"up{args.p}", {"family": "U", "p": args.p}
        G, c, meta = inst.graph, inst.coloring, inst
    elif args.family == "gkp":
        inst = build_g(args.k, args.p)
        stem, params = f"gkp_{args.k}_{args.p}", {"family": "G", "k": args.k, "p": args.p}
        G, c, meta = inst.graph, inst.coloring, inst
    else:
        G, c = random_knc(args.n, args.k, args.chords, args.seed)
        stem = f"rand_n{args.n}_k{args.k}_s{args.seed}"
        params = {"family": "rand", "n": args.n, "k": args.k, "chords": args.chords}
        meta = None
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    og, ogc, js = (str(out / f"{stem}{ext}") for ext in (".og", ".ogc", ".json"))
    write_og(og, G)
    write_ogc(ogc, G, c)
    info = {
        "family": params["family"],
        "k": params.get("k", 0),
        "p": params.get("p"),
        "n": G.n,
        "m": G.m,
        "upper_bound": meta.upper_bound() if meta else None,
        "x_set": list(meta.x_set) if meta else [],
        "manifest": manifest("gen", [], params, [og, ogc, js], getattr(args, "seed", None)),
    }
    Path(js).write_text(_dumps(info))
    print(js)
    return OK


# -- check -----------------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    G, c, inputs = _load(args)
    result: dict[str, Any] = {"n": G.n, "m": G.m, "hamiltonian_path": G.has_increasing_ham_path}
    failures: list[str] = []
    if not result["hamiltonian_path"]:
        failures.append("no increasing Hamiltonian path")
    if c is not None:
        if args.k is not None and c.k > args.k:
            failures.append(f"colouring uses {c.k} classes, more than {args.k}")
        bad = crossing_violations(G, c)
        result["crossing_pairs"] = [[list(e), list(f)] for e, f in bad]
        if bad or not verify_partition(G, c):
            failures.append(f"{len(bad)} same-class crossing pairs")
    elif args.k is not None:
        found, method = k_partition(G, args.k, args.exact_threshold)
        result["partition"] = {"k": args.k, "method": method, "found": found is not None}
        if found is None:
            qualifier = "" if method == "exact" else " (greedy, inconclusive)"
            failures.append(f"no {args.k}-class non-crossing partition{qualifier}")
    result["failures"] = failures
    result["ok"] = not failures
    result["manifest"] = manifest(
        "check", inputs, {"k": args.k, "exact_threshold": args.exact_threshold, "add_path": args.add_path}, []
    )
    _emit(result, None)
    return OK if not failures else INVALID


# -- extract ---------------------------------------------------------------------------


def _coloring_for(G: OrderedGraph, c: EdgeColoring | None, k: int | None, threshold: int) -> EdgeColoring:
    if c is not None:
        if not verify_partition(G, c):
            raise CliFailure(INVALID, "colouring is not a non-crossing partition")
        return c
    if k is None:
        raise CliFailure(INVALID, "give --colors or --k")
    found, method = k_partition(G, k, threshold)
    if found is None:
        raise CliFailure(INVALID, f"no {k}-class non-crossing partition found ({method})")
    return found


def cmd_extract(args: argparse.Namespace) -> int:
    G, c, inputs = _load(args)
    params: dict[str, Any] = {"mode": args.mode, "add_path": args.add_path}
    if not G.has_increasing_ham_path:
        raise CliFailure(INVALID, "no increasing Hamiltonian path")
    try:
        if args.mode == "planar":
            report = extract_planar(G)
        elif args.mode == "genus":
            params["genus"] = args.genus
            report = extract_genus(G, args.genus)
        elif args.mode == "2nc":
            report = extract_2nc(G, _coloring_for(G, c, 2, args.exact_threshold))
        else:
            col = _coloring_for(G, c, args.k, args.exact_threshold)
            k = args.k if args.k is not None else col.k
            params.update(k=k, exhaust=args.exhaust)
            report = extract_knc(G, col, k, exhaust=args.exhaust)
    except (NotTwoPartitionable, AllIntervalsFailed) as exc:
        raise CliFailure(INVALID, str(exc)) from None
    except Degenerate as exc:
        partial = exc.report.to_dict() if exc.report is not None else None
        raise CliFailure(DEGENERATE, str(exc), partial) from None
    except ValueError as exc:
        raise CliFailure(INVALID, str(exc)) from None
    if not report.verify(G):
        raise CliFailure(INVALID, "extracted path failed verification")
    out = report.to_dict()
    out["manifest"] = manifest("extract", inputs, params, [args.out] if args.out else [])
    _emit(out, args.out)
    return OK


# -- oracle / export / bench -----------------------------------------------------------


def cmd_oracle(args: argparse.Namespace) -> int:
    G, _, inputs = _load(args)
    budget = args.budget if args.budget is not None else default_budget()
    solve = longest_increasing_induced_path if args.increasing else longest_induced_path
    res = solve(G, budget)
    out = res.to_dict(timing=args.timing)
    out["manifest"] = manifest("oracle", inputs, {"increasing": args.increasing, "budget": budget}, [])
    _emit(out, None)
    return OK


def cmd_export_arcs(args: argparse.Namespace) -> int:
    G, c, _ = _load(args)
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    Path(args.out).write_text(arc_svg(G, c))
    print(args.out)
    return OK


def _int_range(text: str) -> list[int]:
    """``"3"`` or ``"1..16"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None


def cmd_bench(args: argparse.Namespace) -> int:
    rows = run_grid(args.family, args.k, args.p, args.extractor, args.oracle_max, args.jobs, args.time_limit)
    csv_path, json_path = f"{args.out}.csv", f"{args.out}.json"
    Path(csv_path).parent.mkdir(parents=True, exist_ok=True)
    Path(csv_path).write_text(rows_to_csv(rows, args.timing))
    params = {
        "family": args.family,
        "k": args.k,
        "p": args.p,
        "extractor": args.extractor,
        "oracle_max": args.oracle_max,
    }
    Path(json_path).write_text(
        _dumps({"rows": rows_to_records(rows, args.timing), "manifest": manifest("bench", [], params, [csv_path, json_path])})
    )
    print(csv_path)
    flagged = [r for r in rows if r.status == "timeout"]
    return OK if not flagged else DEGENERATE


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iplab", description="Increasing induced paths in ordered graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write an extremal or random instance")
    gsub = gen.add_subparsers(dest="family", required=True)
    up = gsub.add_parser("up", help="U_p on 2^p + 1 vertices")
    up.add_argument("p", type=int)
    gkp = gsub.add_parser("gkp", help="G(k, p), (2k+1)-non-crossing")
    gkp.add_argument("k", type=int)
    gkp.add_argument("p", type=int)
    rand = gsub.add_parser("rand", help="random k-non-crossing graph along 1..n")
    rand.add_argument("n", type=int)
    rand.add_argument("--k", type=int, default=2)
    rand.add_argument("--chords", type=int, default=None)
    rand.add_argument("--seed", type=int, default=0)
    for p in (up, gkp, rand):
        p.add_argument("--out", default=".", help="output directory")
        p.set_defaults(func=cmd_gen)

    def graph_args(p: argparse.ArgumentParser, colors: bool = True) -> None:
        p.add_argument("file", help=".og graph file")
        if colors:
            p.add_argument("--colors", help=".ogc colouring file")
        p.add_argument("--add-path", action="store_true", help="add missing (i, i+1) edges")

    check = sub.add_parser("check", help="validate a graph and optional colouring")
    graph_args(check)
    check.add_argument("--k", type=int)
    check.add_argument("--exact-threshold", type=int, default=DEFAULT_EXACT_THRESHOLD)
    check.set_defaults(func=cmd_check)

    ext = sub.add_parser("extract", help="extract an increasing induced path")
    ext.add_argument("mode", choices=("planar", "knc", "genus", "2nc"))
    graph_args(ext)
    ext.add_argument("--k", type=int)
    ext.add_argument("--genus", type=int, default=0)
    ext.add_argument("--exhaust", action="store_true", help="keep growing trees past the schedule")
    ext.add_argument("--exact-threshold", type=int, default=DEFAULT_EXACT_THRESHOLD)
    ext.add_argument("--out", help="write the report here instead of stdout")
    ext.set_defaults(func=cmd_extract)

    ora = sub.add_parser("oracle", help="exact longest induced path")
    graph_args(ora, colors=False)
    ora.add_argument("--increasing", action="store_true")
    ora.add_argument("--budget", type=int, help="node expansions (default: $IPLAB_BUDGET or 1e8)")
    ora.add_argument("--timing", action="store_true", help="include wall-clock time")
    ora.set_defaults(func=cmd_oracle)

    arcs = sub.add_parser("export-arcs", help="arc diagram as SVG")
    graph_args(arcs)
    arcs.add_argument("--out", required=True)
    arcs.set_defaults(func=cmd_export_arcs)

    bench = sub.add_parser("bench", help="sweep an extremal family")
    bench.add_argument("--family", choices=("U", "G"), default="U")
    bench.add_argument("--k", type=_int_range, default=[0])
    bench.add_argument("--p", type=_int_range, default=list(range(1, 9)))
    bench.add_argument("--extractor", choices=EXTRACTORS, default="planar")
    bench.add_argument("--oracle-max", type=int, default=18, help="largest n solved exactly")
    bench.add_argument("--jobs", type=int, default=1)
    bench.add_argument("--time-limit", type=float, default=None, help="seconds per instance (with --jobs > 1)")
    bench.add_argument("--timing", action="store_true", help="fill the time_ms column")
    bench.add_argument("--out", default="bench", help="output prefix for .csv and .json")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return BAD_FORMAT
    except CliFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.payload is not None:
            sys.stdout.write(_dumps({"partial": exc.payload, "error": str(exc)}))
        return exc.code
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_FORMAT


if __name__ == "__main__":
    sys.exit(main())
