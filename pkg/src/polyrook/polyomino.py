"""Polyominoes as sets of unit cells, plus the geometric class predicates.

A cell is identified by its top-right corner (i, j), so a normalized
polyomino has cells with i, j >= 1 and its bounding box touches the axes.
Internally y grows upward; the ASCII grid format lists rows top to bottom.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import EmptyInput, NotConnected, NotSublattice, RaggedRows

Cell = tuple[int, int]  # (column i, row j) of the cell's top-right corner
Point = tuple[int, int]  # lattice point (x, y)

_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


@dataclass(frozen=True)
class Polyomino:
    """Normalized, edge-connected set of cells. Immutable."""

    cells: frozenset[Cell]

    @property
    def m(self) -> int:
        return max(i for i, _ in self.cells)

    @property
    def n(self) -> int:
        return max(j for _, j in self.cells)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def to_grid(self) -> str:
        rows = []
        for j in range(self.n, 0, -1):
            rows.append("".join("#" if (i, j) in self.cells else "."
                                for i in range(1, self.m + 1)))
        return "\n".join(rows)

    def to_json(self) -> str:
        return json.dumps({"cells": [list(c) for c in self.sorted_cells()]})

    @classmethod
    def from_json(cls, text: str) -> "Polyomino":
        data = json.loads(text)
        return from_cells((i, j) for i, j in data["cells"])


def from_cells(cells: Iterable[Cell]) -> Polyomino:
    """Normalize (translate min corner to (1,1)), validate connectivity."""
    cellset = set((int(i), int(j)) for i, j in cells)
    if not cellset:
        raise EmptyInput("polyomino needs at least one cell")
    dx = min(i for i, _ in cellset) - 1
    dy = min(j for _, j in cellset) - 1
    cellset = {(i - dx, j - dy) for i, j in cellset}
    _check_connected(cellset)
    return Polyomino(frozenset(cellset))


def _check_connected(cellset: set[Cell]) -> None:
    start = next(iter(cellset))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for di, dj in _STEPS:
            nb = (i + di, j + dj)
            if nb in cellset and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(cellset):
        raise NotConnected("cells are not edge-connected")


def parse_grid(text: str) -> Polyomino:
    """Parse a '#'/'.' grid, top row first."""
    lines = text.rstrip("\n").split("\n")
    lines = [ln for ln in lines if ln != ""]
    if not lines:
        raise EmptyInput("empty grid")
    width = len(lines[0])
    if any(len(ln) != width for ln in lines):
        raise RaggedRows("grid rows have unequal lengths")
    bad = set("".join(lines)) - {"#", "."}
    if bad:
        raise RaggedRows(f"unexpected grid characters: {sorted(bad)}")
    height = len(lines)
    cells = set()
    for r, line in enumerate(lines):
        y = height - r  # top line is the highest row
        for c, ch in enumerate(line):
            if ch == "#":
                cells.add((c + 1, y))
    if not cells:
        raise EmptyInput("grid contains no '#'")
    return from_cells(cells)


def vertex_set(P: Polyomino) -> frozenset[Point]:
    """All corners of all cells of P."""
    pts = set()
    for i, j in P.cells:
        pts.update(((i, j), (i - 1, j), (i, j - 1), (i - 1, j - 1)))
    return frozenset(pts)


@dataclass(frozen=True)
class ClassReport:
    connected: bool
    hv_convex: bool
    simple: bool
    thin: bool
    l_convex: bool
    vertex_sublattice: bool
    sublattice_witness: Optional[tuple[Point, Point]] = None


def _is_thin(cells: frozenset[Cell]) -> bool:
    return not any((i + 1, j) in cells and (i, j + 1) in cells
                   and (i + 1, j + 1) in cells for i, j in cells)


def _is_hv_convex(P: Polyomino) -> bool:
    for j in range(1, P.n + 1):
        cols = [i for i, jj in P.cells if jj == j]
        if cols and max(cols) - min(cols) + 1 != len(cols):
            return False
    for i in range(1, P.m + 1):
        rows = [j for ii, j in P.cells if ii == i]
        if rows and max(rows) - min(rows) + 1 != len(rows):
            return False
    return True


def _l_path_inside(cells: frozenset[Cell], a: Cell, b: Cell) -> bool:
    # a monotone cell path with at most one bend is one of the two L-paths
    def leg_h(j, i1, i2):
        lo, hi = min(i1, i2), max(i1, i2)
        return all((x, j) in cells for x in range(lo, hi + 1))

    def leg_v(i, j1, j2):
        lo, hi = min(j1, j2), max(j1, j2)
        return all((i, y) in cells for y in range(lo, hi + 1))

    (i1, j1), (i2, j2) = a, b
    via1 = leg_h(j1, i1, i2) and leg_v(i2, j1, j2)
    via2 = leg_v(i1, j1, j2) and leg_h(j2, i1, i2)
    return via1 or via2


def _is_l_convex(P: Polyomino) -> bool:
    if not _is_hv_convex(P):
        return False
    cells = P.sorted_cells()
    for a in cells:
        for b in cells:
            if a < b and not _l_path_inside(P.cells, a, b):
                return False
    return True


def _sublattice_witness(pts: frozenset[Point]) -> Optional[tuple[Point, Point]]:
    """First pair (in sorted order) whose meet or join is missing."""
    spts = sorted(pts)
    for k, p in enumerate(spts):
        for q in spts[k + 1:]:
            meet = (min(p[0], q[0]), min(p[1], q[1]))
            join = (max(p[0], q[0]), max(p[1], q[1]))
            if meet not in pts or join not in pts:
                return (p, q)
    return None


def _is_simple(P: Polyomino) -> bool:
    # complement connected within a one-cell margin of the bounding box
    outside = {(x, y)
               for x in range(0, P.m + 2)
               for y in range(0, P.n + 2)
               if (x, y) not in P.cells}
    start = (0, 0)
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for dx, dy in _STEPS:
            nb = (x + dx, y + dy)
            if nb in outside and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(outside)


def classify(P: Polyomino) -> ClassReport:
    witness = _sublattice_witness(vertex_set(P))
    return ClassReport(
        connected=True,  # enforced at construction
        hv_convex=_is_hv_convex(P),
        simple=_is_simple(P),
        thin=_is_thin(P.cells),
        l_convex=_is_l_convex(P),
        vertex_sublattice=witness is None,
        sublattice_witness=witness,
    )


def _lower_covers(v: Point, pts: frozenset[Point]) -> list[Point]:
    below = [u for u in pts
             if u != v and u[0] <= v[0] and u[1] <= v[1]]
    return [u for u in below
            if not any(w != u and w[0] >= u[0] and w[1] >= u[1]
                       for w in below)]


def join_irreducibles(P: Polyomino) -> tuple[list[Point], list[Point]]:
    """Left-boundary and bottom-boundary vertices, each listed as a chain.

    left[j-1] is the top-left corner of the leftmost cell of row j;
    bottom[i-1] is the bottom-right corner of the lowest cell of column i.
    Together these are exactly the join-irreducible points of the vertex
    lattice, which is verified against the order-theoretic definition.
    """
    pts = vertex_set(P)
    if _sublattice_witness(pts) is not None:
        raise NotSublattice("vertex set is not closed under meet and join")
    left = []
    for j in range(1, P.n + 1):
        c = min(i for i, jj in P.cells if jj == j)
        left.append((c - 1, j))
    bottom = []
    for i in range(1, P.m + 1):
        r = min(j for ii, j in P.cells if ii == i)
        bottom.append((i, r - 1))
    for chain in (left, bottom):
        for a, b in zip(chain, chain[1:]):
            if not (a[0] <= b[0] and a[1] <= b[1]):
                raise NotSublattice(f"boundary vertices {a}, {b} are not a chain")
    geometric = set(left) | set(bottom)
    if len(geometric) != P.m + P.n:
        raise NotSublattice("left/bottom boundary vertices are not distinct")
    lattice_ji = {v for v in pts if len(_lower_covers(v, pts)) == 1}
    if geometric != lattice_ji:
        raise NotSublattice(
            "boundary vertices disagree with the join-irreducibles of V(X)")
    return left, bottom
