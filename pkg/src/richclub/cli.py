"""Command-line front end: analyze, dyadic, bounds and randomize subcommands.

Exit codes: 0 success, 2 input error, 3 validation error, 4 internal error.
Data goes to the requested output (stdout with ``--output -``); progress and
error messages go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import __version__
from ._seed import derive_seed
from .dyadic import (
    dyad_bounds,
    dyadicity,
    expected_dyads,
    heterophilicity,
    ub_m10,
    ub_m11,
)
from .ensemble import EnsembleConfig, generate_ensemble, normalized_profile, randomize
from .errors import (
    DegenerateGraphError,
    DisconnectedGraphError,
    DomainError,
    DuplicateEdgeError,
    EdgeListParseError,
    RichClubError,
    SelfLoopError,
    UndefinedRatioError,
)
from .graph import (
    Characteristic,
    DegreeSequence,
    count_dyads,
    degree_sequence,
    density,
    is_graphic,
    read_edge_list,
)
from .metrics import profile

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VALIDATION = 3
EXIT_INTERNAL = 4

ANALYZE_COLUMNS = [
    "k",
    "n1",
    "m11",
    "m10",
    "m00",
    "ub_m11",
    "ub_m10",
    "phi",
    "phi_new",
    "phi_bar",
    "delta",
    "m11_ran_mean",
    "m11_ran_sd",
    "m10_ran_mean",
    "m10_ran_sd",
    "rho",
    "rho_bar",
]


class _InputError(RichClubError):
    pass


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _jsonable(x):
    if isinstance(x, float):
        return float(f"{x:.12g}")
    return x


def _write_csv(stream, columns, rows):
    stream.write(",".join(columns) + "\n")
    for row in rows:
        stream.write(",".join(_fmt(row[c]) for c in columns) + "\n")


def _emit(out_base: str, fmt: str, columns, rows, json_extra=None):
    """Write rows as <out>.csv and/or <out>.json; '-' streams one format to stdout."""
    doc = dict(json_extra or {})
    doc["rows"] = [{c: _jsonable(r[c]) for c in columns} for r in rows]
    if out_base == "-":
        if fmt == "both":
            raise DomainError("--format both cannot be streamed to stdout")
        if fmt == "csv":
            _write_csv(sys.stdout, columns, rows)
        else:
            json.dump(doc, sys.stdout, indent=2)
            sys.stdout.write("\n")
        return
    if fmt in ("csv", "both"):
        with open(out_base + ".csv", "w", encoding="utf-8", newline="") as fh:
            _write_csv(fh, columns, rows)
    if fmt in ("json", "both"):
        with open(out_base + ".json", "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")


def _default_threads(value: Optional[int]) -> int:
    if value is not None:
        return value
    env = os.environ.get("RICHCLUB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise DomainError(f"RICHCLUB_THREADS is not an integer: {env!r}") from None
    return os.cpu_count() or 1


def _parse_k_grid(text: Optional[str]):
    if text is None:
        return None
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise DomainError(f"--k-grid must be a comma-separated integer list: {text!r}") from None


def cmd_analyze(args) -> int:
    g = read_edge_list(args.input, allow_disconnected=args.allow_disconnected)
    if g.edge_count < 2:
        raise DegenerateGraphError("graph has fewer than 2 edges; nothing to analyze")
    cfg = EnsembleConfig(
        size=args.ensemble_size,
        master_seed=args.seed,
        swaps_per_edge=args.swaps_per_edge,
        strict_connected=args.strict_connected_null,
    )
    threads = _default_threads(args.threads)
    k_grid = _parse_k_grid(args.k_grid)
    prof = profile(g, k_grid)
    print(
        f"analyzing {args.input}: N={g.node_count} M={g.edge_count}, "
        f"{cfg.size} replicates on {len(prof)} thresholds",
        file=sys.stderr,
    )
    norm = normalized_profile(g, cfg, threads=threads, rich_profile=prof)
    rows = []
    for p, q in zip(prof.points, norm):
        rows.append(
            {
                "k": p.k,
                "n1": p.n1,
                "m11": p.m11,
                "m10": p.m10,
                "m00": p.m00,
                "ub_m11": p.ub_m11,
                "ub_m10": p.ub_m10,
                "phi": p.phi,
                "phi_new": p.phi_new,
                "phi_bar": p.phi_bar,
                "delta": p.delta,
                "m11_ran_mean": q.m11_ran_mean,
                "m11_ran_sd": q.m11_ran_sd,
                "m10_ran_mean": q.m10_ran_mean,
                "m10_ran_sd": q.m10_ran_sd,
                "rho": q.rho,
                "rho_bar": q.rho_bar,
            }
        )
    extra = {
        "provenance": {
            "input": args.input,
            "tool_version": __version__,
            "master_seed": cfg.master_seed,
        },
        "graph": {
            "nodes": g.node_count,
            "edges": g.edge_count,
            "max_degree": g.max_degree,
            "density": _jsonable(float(density(g))),
        },
        "config": {
            "ensemble_size": cfg.size,
            "master_seed": cfg.master_seed,
            "swaps_per_edge": cfg.swaps_per_edge,
            "max_attempt_factor": cfg.max_attempt_factor,
            "strict_connected": cfg.strict_connected,
        },
    }
    _emit(args.output, args.format, ANALYZE_COLUMNS, rows, json_extra=extra)
    return EXIT_OK


def _read_characteristic(path: str, g) -> Characteristic:
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise EdgeListParseError("expected 'label<TAB>0|1'", lineno)
            label, flag = parts
            if flag not in ("0", "1"):
                raise EdgeListParseError(f"attribute for {label!r} must be 0 or 1", lineno)
            if label in values:
                raise EdgeListParseError(f"duplicate attribute for {label!r}", lineno)
            values[label] = int(flag)
    missing = [lab for lab in g.labels if lab not in values]
    if missing:
        raise _InputError(f"attribute file misses node {missing[0]!r}")
    unknown = [lab for lab in values if lab not in set(g.labels)]
    if unknown:
        raise _InputError(f"attribute file names unknown node {unknown[0]!r}")
    return Characteristic(tuple(values[lab] for lab in g.labels))


def cmd_dyadic(args) -> int:
    g = read_edge_list(args.input, allow_disconnected=args.allow_disconnected)
    c = _read_characteristic(args.attributes, g)
    counts = count_dyads(g, c)
    exp = expected_dyads(g, c.n1)
    try:
        dy = dyadicity(counts, exp)
    except UndefinedRatioError:
        dy = None
    try:
        het = heterophilicity(counts, exp)
    except UndefinedRatioError:
        het = None
    bounds = dyad_bounds(g, degree_sequence(g), c.n1)
    columns = [
        "n1",
        "n0",
        "m11",
        "m10",
        "m00",
        "expected_m11",
        "expected_m10",
        "dyadicity",
        "heterophilicity",
        "ub_m11",
        "ub_m10",
    ]
    row = {
        "n1": c.n1,
        "n0": c.n0,
        "m11": counts.m11,
        "m10": counts.m10,
        "m00": counts.m00,
        "expected_m11": float(exp.expected_m11),
        "expected_m10": float(exp.expected_m10),
        "dyadicity": dy,
        "heterophilicity": het,
        "ub_m11": bounds.ub_m11,
        "ub_m10": bounds.ub_m10,
    }
    _emit(args.output, args.format, columns, [row])
    return EXIT_OK


def _load_degrees(args) -> DegreeSequence:
    if args.input:
        return degree_sequence(read_edge_list(args.input, allow_disconnected=True))
    if args.degrees:
        text = args.degrees
    else:
        with open(args.degrees_file, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        values = [int(t) for t in text.split()]
    except ValueError:
        raise _InputError("degree sequence must be whitespace-separated integers") from None
    if any(x < 0 for x in values):
        raise _InputError("degrees must be nonnegative")
    return DegreeSequence(tuple(sorted(values, reverse=True)))


def cmd_bounds(args) -> int:
    ds = _load_degrees(args)
    n = len(ds)
    if args.check_graphic and not is_graphic(ds.degrees):
        if sum(ds.degrees) % 2 != 0:
            raise DomainError("sequence is not graphic: odd degree sum")
        raise DomainError("sequence is not graphic: Erdős–Gallai inequality violated")
    if ds.total % 2 != 0:
        raise DomainError("odd degree sum: edge count is undefined")
    m = ds.total // 2
    if args.sweep:
        n1_values = range(n + 1)
    elif args.n1 is not None:
        if not 0 <= args.n1 <= n:
            raise DomainError(f"--n1 must be in 0..{n}")
        n1_values = [args.n1]
    else:
        raise DomainError("pass --n1 or --sweep")
    columns = ["n1", "ub_m11_basic", "ub_m10_basic", "ub_m11", "ub_m10"]
    rows = []
    for n1 in n1_values:
        rows.append(
            {
                "n1": n1,
                "ub_m11_basic": min(m, n1 * (n1 - 1) // 2),
                "ub_m10_basic": min(m, n1 * (n - n1)),
                "ub_m11": ub_m11(ds, n1),
                "ub_m10": ub_m10(ds, n1),
            }
        )
    _emit(args.output, args.format, columns, rows)
    return EXIT_OK


def cmd_randomize(args) -> int:
    g = read_edge_list(args.input, allow_disconnected=args.allow_disconnected)
    if g.edge_count < 2:
        raise DegenerateGraphError("graph has fewer than 2 edges; nothing to randomize")

    def write_graph(h, path):
        lines = [f"{h.label_of(u)} {h.label_of(v)}\n" for u, v in h.edges]
        if path == "-":
            sys.stdout.writelines(lines)
        else:
            with open(path, "w", encoding="utf-8", newline="") as fh:
                fh.writelines(lines)

    if args.count == 1:
        h = randomize(g, swaps_per_edge=args.swaps_per_edge, seed=args.seed)
        write_graph(h, args.output)
    else:
        if args.output == "-":
            raise DomainError("--count > 1 requires a file output path")
        for r in range(args.count):
            h = randomize(g, swaps_per_edge=args.swaps_per_edge, seed=derive_seed(args.seed, r))
            write_graph(h, f"{args.output}.{r}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="richclub",
        description="Rich-club ordering and dyadic-effect analysis of undirected simple graphs.",
    )
    parser.add_argument("--version", action="version", version=f"richclub {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full per-threshold rich-club report with null ensemble")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--output", required=True, help="output base path ('-' for stdout)")
    p.add_argument("--format", choices=["csv", "json", "both"], default="csv")
    p.add_argument("--ensemble-size", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--swaps-per-edge", type=int, default=10)
    p.add_argument("--k-grid", help="comma-separated thresholds (default: degree breakpoints)")
    p.add_argument("--allow-disconnected", action="store_true")
    p.add_argument("--strict-connected-null", action="store_true")
    p.add_argument("--threads", type=int, help="worker threads (default: RICHCLUB_THREADS or all cores)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("dyadic", help="dyadicity/heterophilicity for a binary node attribute")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--attributes", required=True, help="per-node attribute file: label<TAB>0|1")
    p.add_argument("--output", default="-")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--allow-disconnected", action="store_true")
    p.set_defaults(func=cmd_dyadic)

    p = sub.add_parser("bounds", help="basic and degree-sequence upper bounds on dyad counts")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="edge-list file")
    src.add_argument("--degrees", help="inline degree sequence, e.g. '4 1 1 1 1'")
    src.add_argument("--degrees-file", help="file of whitespace-separated degrees")
    p.add_argument("--n1", type=int, help="club size to evaluate")
    p.add_argument("--sweep", action="store_true", help="evaluate every n1 in 0..N")
    p.add_argument("--check-graphic", action="store_true")
    p.add_argument("--output", default="-")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("randomize", help="degree-preserving rewiring of an edge list")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True, help="output edge-list path ('-' for stdout)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--swaps-per-edge", type=int, default=10)
    p.add_argument("--count", type=int, default=1, help="write this many replicates")
    p.add_argument("--allow-disconnected", action="store_true")
    p.set_defaults(func=cmd_randomize)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, EdgeListParseError, SelfLoopError, DuplicateEdgeError, _InputError) as exc:
        print(f"richclub: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DisconnectedGraphError, DomainError) as exc:
        print(f"richclub: error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except RichClubError as exc:
        print(f"richclub: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry():  # console-script shim
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
