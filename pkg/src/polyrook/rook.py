"""Rook polynomials, the chain-to-rook-configuration map, and the
machine check of the h2 < r2 theorem for non-thin sublattice polyominoes."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import CounterexampleFound, IsThin, NotSublattice, TooLarge
from .hseries import (HVector, descent_word, h_by_descents,
                      h_by_fvector, h_by_multichains)
from .lattice import (MaximalChain, OmegaLabeling, build_lattice,
                      linear_extension, max_chains)
from .polyomino import Cell, Polyomino, classify

RookPolynomial = tuple[int, ...]
RookConfig = frozenset[Cell]


def _add_shifted(base: list[int], extra: tuple[int, ...]) -> None:
    # base += t * extra
    for k, c in enumerate(extra):
        while len(base) <= k + 1:
            base.append(0)
        base[k + 1] += c


def rook_polynomial(P: Polyomino) -> RookPolynomial:
    """Exact rook polynomial via cell deletion with bitmask memoization:
    r(B) = r(B - c) + t * r(B - row(c) - col(c)), pivot c = first
    remaining cell in row-major order."""
    cells = sorted(P.cells, key=lambda c: (c[1], c[0]))
    if len(cells) > 64:
        raise TooLarge("rook recursion supports at most 64 cells")
    row_col_mask = []
    for i, j in cells:
        mask = 0
        for k, (x, y) in enumerate(cells):
            if x == i or y == j:
                mask |= 1 << k
        row_col_mask.append(mask)
    memo: dict[int, tuple[int, ...]] = {0: (1,)}

    def solve(mask: int) -> tuple[int, ...]:
        known = memo.get(mask)
        if known is not None:
            return known
        pivot = (mask & -mask).bit_length() - 1
        coeffs = list(solve(mask & ~(1 << pivot)))
        _add_shifted(coeffs, solve(mask & ~row_col_mask[pivot]))
        result = tuple(coeffs)
        memo[mask] = result
        return result

    return solve((1 << len(cells)) - 1)


def rook_polynomial_bruteforce(P: Polyomino) -> RookPolynomial:
    """Oracle: enumerate all cell subsets up to size min(m, n) and count
    the non-attacking ones. Test use only."""
    cells = P.sorted_cells()
    coeffs = [1]
    for k in range(1, min(P.m, P.n) + 1):
        count = 0
        for combo in combinations(cells, k):
            cols = {i for i, _ in combo}
            rows = {j for _, j in combo}
            if len(cols) == k and len(rows) == k:
                count += 1
        coeffs.append(count)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def is_non_attacking(config: RookConfig) -> bool:
    cols = {i for i, _ in config}
    rows = {j for _, j in config}
    return len(cols) == len(config) and len(rows) == len(config)


def psi(chain: MaximalChain, omega: OmegaLabeling) -> RookConfig:
    """Cells C(mu_{i+1}) marked by the descents i of the chain."""
    descents = descent_word(chain, omega).descents
    return frozenset(chain[i + 1] for i in descents)


def psi_image_report(P: Polyomino, omega: OmegaLabeling,
                     lattice=None) -> tuple[bool, set[tuple[Cell, ...]]]:
    """Map every maximal chain through psi; report injectivity and image.

    Image elements are sorted cell tuples for canonical equality.
    """
    L = lattice if lattice is not None else build_lattice(P)
    image: set[tuple[Cell, ...]] = set()
    injective = True
    for chain in max_chains(L):
        key = tuple(sorted(psi(chain, omega)))
        if key in image:
            injective = False
        image.add(key)
    return injective, image


def antidiagonal_witness(P: Polyomino) -> RookConfig:
    """The anti-diagonal 2-rook pair of the first 2x2 block of P."""
    cells = P.cells
    for i, j in sorted(cells):
        block = {(i + 1, j), (i, j + 1), (i + 1, j + 1)}
        if block <= cells:
            return frozenset({(i + 1, j), (i, j + 1)})
    raise IsThin("polyomino contains no 2x2 block")


@dataclass(frozen=True)
class TheoremReport:
    h: HVector
    r: RookPolynomial
    thin: bool
    dominance: bool
    strict_at_2: bool
    witness: Optional[RookConfig]

    def to_json(self) -> str:
        return json.dumps({
            "h": list(self.h),
            "r": list(self.r),
            "thin": self.thin,
            "dominance": self.dominance,
            "strict_at_2": self.strict_at_2,
            "witness": (sorted([list(c) for c in self.witness])
                        if self.witness is not None else None),
        })


def _coeff(poly: tuple[int, ...], k: int) -> int:
    return poly[k] if k < len(poly) else 0


def verify_theorem(P: Polyomino, seed: int = 0) -> TheoremReport:
    """Compute h (three ways) and r (two ways) and check the theorem's
    conclusions on this instance. Any internal disagreement or a failed
    conclusion raises CounterexampleFound."""
    cls = classify(P)
    if not cls.hv_convex:
        # the descent machinery describes the polyomino ring only for
        # convex shapes; a sublattice vertex set alone is not enough
        raise NotSublattice("h-vector methods require a convex polyomino")
    L = build_lattice(P)
    omega = linear_extension(P, seed)
    h = h_by_descents(P, omega, lattice=L)
    h2 = h_by_multichains(P, lattice=L)
    h3 = h_by_fvector(P, lattice=L)
    if not (h == h2 == h3):
        raise CounterexampleFound(
            f"h-vector methods disagree: {h} {h2} {h3}\n{P.to_grid()}")
    r = rook_polynomial(P)
    if len(P.cells) <= 20 and r != rook_polynomial_bruteforce(P):
        raise CounterexampleFound(
            f"rook polynomial methods disagree on\n{P.to_grid()}")
    thin = cls.thin
    kmax = max(len(h), len(r))
    dominance = all(_coeff(h, k) <= _coeff(r, k) for k in range(kmax))
    strict_at_2 = _coeff(h, 2) < _coeff(r, 2)
    witness = None
    if not thin:
        witness = antidiagonal_witness(P)
        _, image = psi_image_report(P, omega, lattice=L)
        if tuple(sorted(witness)) in image:
            raise CounterexampleFound(
                f"anti-diagonal witness lies in the psi-image of\n{P.to_grid()}")
        if not (dominance and strict_at_2):
            raise CounterexampleFound(
                f"h2 < r2 fails on non-thin instance\n{P.to_grid()}\n"
                f"h={h} r={r}")
    return TheoremReport(h, r, thin, dominance, strict_at_2, witness)
