"""Exhaustive enumeration of fixed (translation-distinct) polyominoes.

Redelmeier-style growth: cells enter a frontier once, are tried once, and
stay excluded for the rest of the branch, so every fixed polyomino with
the first cell at the canonical origin appears exactly once.
"""

from __future__ import annotations

from typing import Iterator

from .errors import OutOfRange
from .polyomino import Polyomino, from_cells

MAX_CELLS = 10


def _allowed(p: tuple[int, int]) -> bool:
    # half-plane canonical form: first cell is the lowest-leftmost cell
    x, y = p
    return y > 0 or (y == 0 and x >= 0)


def enumerate_fixed_polyominoes(n: int) -> Iterator[Polyomino]:
    """Every fixed polyomino with exactly n cells, normalized, each once,
    in a deterministic order."""
    if not 1 <= n <= MAX_CELLS:
        raise OutOfRange(f"cell count must be in 1..{MAX_CELLS}, got {n}")

    def grow(cells, frontier, seen):
        for idx, c in enumerate(frontier):
            new_cells = cells + [c]
            if len(new_cells) == n:
                yield from_cells(new_cells)
                continue
            fresh = []
            x, y = c
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if _allowed(nb) and nb not in seen:
                    fresh.append(nb)
                    seen.add(nb)
            yield from grow(new_cells, frontier[idx + 1:] + fresh, seen)
            for nb in fresh:
                seen.remove(nb)

    yield from grow([], [(0, 0)], {(0, 0)})
