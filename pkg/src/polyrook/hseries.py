"""Three independent routes to the h-vector of a sublattice polyomino.

1. descent statistic over maximal chains of V(X),
2. binomial transform of the multichain (Hilbert function) counts,
3. f-to-h transform of the order complex's f-vector.

All three must agree; the sweep and the acceptance suite enforce it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import NegativeCoefficient
from .lattice import (MaximalChain, OmegaLabeling, VertexLattice,
                      build_lattice, chain_f_vector, max_chains,
                      multichain_count)
from .polyomino import Polyomino

HVector = tuple[int, ...]


@dataclass(frozen=True)
class DescentWord:
    labels: tuple[int, ...]
    descents: frozenset[int]  # positions i (1-based) with label_i > label_{i+1}


def _trim(coeffs) -> HVector:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def descent_word(chain: MaximalChain, omega: OmegaLabeling) -> DescentWord:
    """Label word of a maximal chain: an up-step to height y contributes
    the label of the y-th left-boundary vertex, a right-step to column x
    the label of the x-th bottom-boundary vertex."""
    labels = []
    for a, b in zip(chain, chain[1:]):
        if b[1] == a[1] + 1:
            labels.append(omega.labels[omega.left[b[1] - 1]])
        else:
            labels.append(omega.labels[omega.bottom[b[0] - 1]])
    descents = frozenset(i for i in range(1, len(labels))
                         if labels[i - 1] > labels[i])
    return DescentWord(tuple(labels), descents)


def h_by_descents(P: Polyomino, omega: OmegaLabeling,
                  lattice: VertexLattice | None = None) -> HVector:
    """h_k = number of maximal chains with exactly k descents."""
    L = lattice if lattice is not None else build_lattice(P)
    counts = [0] * (P.m + P.n)
    for chain in max_chains(L):
        counts[len(descent_word(chain, omega).descents)] += 1
    return _trim(counts)


def h_by_multichains(P: Polyomino,
                     lattice: VertexLattice | None = None) -> HVector:
    """h via the Hilbert function H(k) = #(k-multichains):
    h_j = sum_i (-1)^(j-i) C(d, j-i) H(i), d = m + n + 1."""
    L = lattice if lattice is not None else build_lattice(P)
    d = P.m + P.n + 1
    # degree m+n suffices empirically; two spare slots catch any excess
    jmax = P.m + P.n + 2
    H = [multichain_count(L, i) for i in range(jmax + 1)]
    coeffs = []
    for j in range(jmax + 1):
        hj = sum((-1) ** (j - i) * comb(d, j - i) * H[i]
                 for i in range(j + 1))
        if hj < 0:
            raise NegativeCoefficient(f"h_{j} = {hj} from multichain counts")
        coeffs.append(hj)
    return _trim(coeffs)


def f_to_h(f: list[int], d: int) -> HVector:
    """Coefficients of sum_i f_{i-1} t^i (1-t)^(d-i); f[0] is f_{-1}."""
    coeffs = [0] * (d + 1)
    for i, fi in enumerate(f):
        for k in range(d - i + 1):
            coeffs[i + k] += fi * (-1) ** k * comb(d - i, k)
    if any(c < 0 for c in coeffs):
        raise NegativeCoefficient(f"f-to-h transform of {f} gave {coeffs}")
    return _trim(coeffs)


def h_by_fvector(P: Polyomino,
                 lattice: VertexLattice | None = None) -> HVector:
    L = lattice if lattice is not None else build_lattice(P)
    return f_to_h(chain_f_vector(L), P.m + P.n + 1)
