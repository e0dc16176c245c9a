"""Exhaustive theorem sweeps over enumerated polyominoes.

Each instance is classified, filtered, and pushed through the full
pipeline; any violated conclusion raises CounterexampleFound with the
offending grid. Records are deterministic, so CSV output is byte-stable.
"""

from __future__ import annotations

import csv
import io
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .enumeration import enumerate_fixed_polyominoes
from .errors import CounterexampleFound, NonUnitCover, NotSublattice
from .hseries import descent_word, h_by_descents
from .lattice import build_lattice, linear_extension, max_chains
from .lproject import verify_projection
from .polyomino import Polyomino, classify, from_cells
from .rook import (is_non_attacking, psi, psi_image_report, rook_polynomial,
                   verify_theorem)

CLASS_FILTERS = ("all", "convex_sublattice", "l_convex", "thin")
DEFAULT_SEEDS = (0, 1, 2)

CSV_COLUMNS = ("cells", "grid", "thin", "convex", "sublattice", "lconvex",
               "h", "r", "dominance", "strict_at_2", "equality")


@dataclass(frozen=True)
class SweepRecord:
    cell_count: int
    grid: str  # rows top to bottom, joined by '|'
    thin: bool
    convex: bool
    sublattice: bool
    lconvex: bool
    h: Optional[tuple[int, ...]]
    r: tuple[int, ...]
    dominance: Optional[bool]
    strict_at_2: Optional[bool]
    equality: Optional[bool]
    runtime_micros: int

    def csv_row(self) -> list[str]:
        def fmt_poly(p):
            return "" if p is None else " ".join(str(c) for c in p)

        def fmt_bool(b):
            return "" if b is None else str(int(b))

        return [str(self.cell_count), self.grid, str(int(self.thin)),
                str(int(self.convex)), str(int(self.sublattice)),
                str(int(self.lconvex)), fmt_poly(self.h), fmt_poly(self.r),
                fmt_bool(self.dominance), fmt_bool(self.strict_at_2),
                fmt_bool(self.equality)]


@dataclass(frozen=True)
class SweepSummary:
    instances: int
    per_class: dict[str, int]
    counterexamples: int
    elapsed_seconds: float


def _check_psi_properties(P: Polyomino, lattice, seed: int) -> None:
    omega = linear_extension(P, seed)
    for chain in max_chains(lattice):
        word = descent_word(chain, omega)
        if any(i + 1 in word.descents for i in word.descents):
            raise CounterexampleFound(
                f"consecutive descents {sorted(word.descents)} on\n{P.to_grid()}")
        config = psi(chain, omega)
        if len(config) != len(word.descents) or not is_non_attacking(config):
            raise CounterexampleFound(
                f"psi image is not a rook configuration on\n{P.to_grid()}")
        if not config <= P.cells:
            raise CounterexampleFound(
                f"psi marked a cell outside the polyomino on\n{P.to_grid()}")
    injective, _ = psi_image_report(P, omega, lattice=lattice)
    if not injective:
        raise CounterexampleFound(f"psi is not injective on\n{P.to_grid()}")


def analyze_instance(cells: Sequence[tuple[int, int]],
                     seeds: Sequence[int] = DEFAULT_SEEDS) -> SweepRecord:
    """Full pipeline on one instance; raises CounterexampleFound on any
    violated conclusion."""
    start = time.perf_counter()
    P = from_cells(cells)
    report = classify(P)
    grid = P.to_grid().replace("\n", "|")

    h = None
    dominance = None
    strict_at_2 = None
    equality = None
    r = None
    # h is only computable on the convex sublattice class: for non-convex
    # shapes the vertex lattice no longer determines the polyomino ring
    # (e.g. "#.#|###" has a full-grid vertex set but a missing cell)
    if report.vertex_sublattice and report.hv_convex:
        try:
            lattice = build_lattice(P)
        except (NotSublattice, NonUnitCover):
            lattice = None
        if lattice is not None:
            theorem = verify_theorem(P)
            h, r = theorem.h, theorem.r
            dominance, strict_at_2 = theorem.dominance, theorem.strict_at_2
            equality = h == r
            for seed in seeds:
                if h_by_descents(P, linear_extension(P, seed),
                                 lattice=lattice) != h:
                    raise CounterexampleFound(
                        f"h depends on the omega seed on\n{P.to_grid()}")
                _check_psi_properties(P, lattice, seed)
            if report.thin and report.hv_convex and not equality:
                raise CounterexampleFound(
                    f"thin convex sublattice instance with h != r:\n"
                    f"{P.to_grid()}\nh={h} r={r}")
            if equality and not report.thin:
                raise CounterexampleFound(
                    f"non-thin instance with h = r:\n{P.to_grid()}")
    if r is None:
        r = rook_polynomial(P)
    if report.l_convex:
        verify_projection(P)
    micros = int((time.perf_counter() - start) * 1e6)
    return SweepRecord(
        cell_count=len(P.cells), grid=grid, thin=report.thin,
        convex=report.hv_convex, sublattice=report.vertex_sublattice,
        lconvex=report.l_convex, h=h, r=r, dominance=dominance,
        strict_at_2=strict_at_2, equality=equality, runtime_micros=micros)


def _passes(report, class_filter: str) -> bool:
    if class_filter == "all":
        return True
    if class_filter == "convex_sublattice":
        return report.hv_convex and report.vertex_sublattice
    if class_filter == "l_convex":
        return report.l_convex
    if class_filter == "thin":
        return report.thin
    raise ValueError(f"unknown class filter {class_filter!r}")


def _worker(args):
    cells, seeds = args
    return analyze_instance(cells, seeds)


def sweep(max_cells: int,
          class_filter: str = "all",
          omega_seeds: Sequence[int] = DEFAULT_SEEDS,
          threads: Optional[int] = None
          ) -> tuple[list[SweepRecord], SweepSummary]:
    if class_filter not in CLASS_FILTERS:
        raise ValueError(f"class filter must be one of {CLASS_FILTERS}")
    start = time.perf_counter()
    jobs = []
    for n in range(1, max_cells + 1):
        for P in enumerate_fixed_polyominoes(n):
            if _passes(classify(P), class_filter):
                jobs.append((tuple(P.sorted_cells()), tuple(omega_seeds)))
    if threads is None:
        threads = int(os.environ.get("POLYALG_THREADS", "1"))
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(_worker, jobs, chunksize=16))
    else:
        records = [_worker(job) for job in jobs]
    per_class = {
        "thin": sum(rec.thin for rec in records),
        "convex": sum(rec.convex for rec in records),
        "sublattice": sum(rec.sublattice for rec in records),
        "lconvex": sum(rec.lconvex for rec in records),
    }
    summary = SweepSummary(
        instances=len(records), per_class=per_class, counterexamples=0,
        elapsed_seconds=time.perf_counter() - start)
    return records, summary


def records_to_csv(records: Sequence[SweepRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(rec.csv_row())
    return buf.getvalue()
