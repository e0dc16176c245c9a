"""Command-line surface.

Exit codes: 0 success, 1 I/O or parse error, 2 class-precondition
failure, 3 counterexample found.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (CounterexampleFound, NonUnitCover, NotLConvex,
                     NotSublattice, PolyominoError)
from .hseries import descent_word
from .lattice import build_lattice, linear_extension, max_chains, step_word
from .lproject import verify_projection
from .polyomino import classify, parse_grid
from .rook import psi, rook_polynomial, verify_theorem
from .sweep import CLASS_FILTERS, DEFAULT_SEEDS, records_to_csv, sweep


def _load(path: str):
    try:
        with open(path) as fh:
            return parse_grid(fh.read())
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(1)
    except PolyominoError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(1)


def _cmd_analyze(args) -> int:
    P = _load(args.file)
    try:
        report = verify_theorem(P)
    except (NotSublattice, NonUnitCover) as exc:
        # h is unavailable without the lattice; rooks need no lattice
        out = {"h": None, "r": list(rook_polynomial(P)),
               "thin": classify(P).thin, "dominance": None,
               "strict_at_2": None, "witness": None}
        print(json.dumps(out))
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CounterexampleFound as exc:
        print(f"counterexample: {exc}", file=sys.stderr)
        return 3
    print(report.to_json())
    return 0


def _cmd_sweep(args) -> int:
    seeds = [int(s) for s in args.seeds.split(",")] if args.seeds \
        else list(DEFAULT_SEEDS)
    try:
        records, summary = sweep(args.max_cells, args.klass,
                                 omega_seeds=seeds, threads=args.threads)
    except CounterexampleFound as exc:
        print(f"counterexample: {exc}", file=sys.stderr)
        return 3
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(records_to_csv(records))
    print(json.dumps({
        "instances": summary.instances,
        "per_class": summary.per_class,
        "counterexamples": summary.counterexamples,
        "elapsed_seconds": round(summary.elapsed_seconds, 3),
    }))
    return 0


def _cmd_project(args) -> int:
    P = _load(args.file)
    try:
        report = verify_projection(P)
    except NotLConvex as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolyominoError as exc:
        print(f"counterexample: {exc}", file=sys.stderr)
        return 3
    print(report.to_json())
    return 0


def _cmd_chains(args) -> int:
    P = _load(args.file)
    try:
        lattice = build_lattice(P)
        omega = linear_extension(P, args.seed)
    except (NotSublattice, NonUnitCover) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for chain in max_chains(lattice):
        word = descent_word(chain, omega)
        cells = sorted(psi(chain, omega))
        print(json.dumps({
            "steps": step_word(chain),
            "labels": list(word.labels),
            "descents": sorted(word.descents),
            "psi": [list(c) for c in cells],
        }))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyrook",
        description="h-polynomials, rook polynomials and theorem sweeps "
                    "for lattice-convex polyominoes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one grid file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("sweep", help="exhaustive sweep over enumerated "
                                     "polyominoes")
    p.add_argument("--max-cells", type=int, required=True)
    p.add_argument("--class", dest="klass", choices=CLASS_FILTERS,
                   default="all")
    p.add_argument("--seeds", default=None,
                   help="comma-separated omega seeds (default 0,1,2)")
    p.add_argument("--out", default=None, help="CSV output path")
    p.add_argument("--threads", type=int, default=None,
                   help="worker count (default: POLYALG_THREADS or 1)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("project", help="Ferrers projection report")
    p.add_argument("file")
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("chains", help="per-chain debug view")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_chains)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
