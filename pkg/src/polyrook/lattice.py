"""The vertex lattice of a polyomino: chains, labelings, counting oracles.

V(X) ordered componentwise is a finite distributive lattice whenever it is
closed under min and max. Maximal chains are monotone unit-step lattice
paths from (0,0) to (m,n); that every cover relation really is a unit step
is asserted per instance at construction time, not assumed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .errors import NonUnitCover, NotSublattice
from .polyomino import Point, Polyomino, join_irreducibles, vertex_set, \
    _sublattice_witness


class VertexLattice:
    def __init__(self, points: frozenset[Point], m: int, n: int):
        self.point_set = points
        self.elements = sorted(points)
        self.m = m
        self.n = n
        self.bottom = (0, 0)
        self.top = (m, n)
        if self.bottom not in points or self.top not in points:
            raise NotSublattice("lattice must contain (0,0) and (m,n)")
        self._assert_unit_covers()
        # strict down-sets, used by the counting recurrences
        self.down = {v: [u for u in self.elements
                         if u != v and u[0] <= v[0] and u[1] <= v[1]]
                     for v in self.elements}

    def _assert_unit_covers(self):
        # every element above u must be reachable from u by unit up/right
        # steps inside V(X); otherwise some cover skips a point
        pts = self.point_set
        for u in self.elements:
            ups = {v for v in pts
                   if v != u and v[0] >= u[0] and v[1] >= u[1]}
            seen = set()
            stack = [u]
            while stack:
                x, y = stack.pop()
                for nb in ((x + 1, y), (x, y + 1)):
                    if nb in ups and nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
            if seen != ups:
                v = min(ups - seen)
                raise NonUnitCover(f"cover above {u} toward {v} skips V(X)")

    def __len__(self):
        return len(self.elements)


MaximalChain = tuple[Point, ...]


@dataclass(frozen=True, eq=True)
class OmegaLabeling:
    """Order-preserving bijection from the join-irreducibles to 1..m+n."""

    labels: dict[Point, int]
    left: tuple[Point, ...]
    bottom: tuple[Point, ...]

    def __post_init__(self):
        ji = list(self.labels)
        size = len(ji)
        assert sorted(self.labels.values()) == list(range(1, size + 1))
        for p in ji:
            for q in ji:
                if p != q and p[0] <= q[0] and p[1] <= q[1]:
                    assert self.labels[p] < self.labels[q], \
                        f"labeling not order-preserving at {p}, {q}"


def build_lattice(P: Polyomino) -> VertexLattice:
    pts = vertex_set(P)
    if _sublattice_witness(pts) is not None:
        raise NotSublattice("vertex set is not a sublattice of N^2")
    return VertexLattice(pts, P.m, P.n)


def linear_extension(P: Polyomino, seed: int = 0) -> OmegaLabeling:
    """A linear extension of the join-irreducible poset.

    Seed 0 picks, at each step, the lowest available left-boundary vertex
    ahead of any bottom-boundary vertex (canonical); other seeds draw a
    seeded-random topological order. Plain left-chain-then-bottom-chain
    would break order preservation whenever some bottom vertex lies below
    a left vertex.
    """
    left, bottom = join_irreducibles(P)
    ji = list(left) + list(bottom)
    below = {p: [q for q in ji
                 if q != p and q[0] <= p[0] and q[1] <= p[1]]
             for p in ji}
    rng = random.Random(seed) if seed != 0 else None
    labels: dict[Point, int] = {}
    preference = {p: k for k, p in enumerate(ji)}  # left chain first
    while len(labels) < len(ji):
        avail = [p for p in ji
                 if p not in labels and all(q in labels for q in below[p])]
        pick = rng.choice(avail) if rng else min(avail, key=preference.get)
        labels[pick] = len(labels) + 1
    return OmegaLabeling(labels, tuple(left), tuple(bottom))


def max_chains(L: VertexLattice) -> Iterator[MaximalChain]:
    """All maximal chains, in lexicographic step-word order (R before U)."""
    pts = L.point_set
    top = L.top

    def walk(path: list[Point]) -> Iterator[MaximalChain]:
        v = path[-1]
        if v == top:
            yield tuple(path)
            return
        for nb in ((v[0] + 1, v[1]), (v[0], v[1] + 1)):
            if nb in pts and nb[0] <= top[0] and nb[1] <= top[1]:
                path.append(nb)
                yield from walk(path)
                path.pop()

    yield from walk([L.bottom])


def step_word(chain: MaximalChain) -> str:
    word = []
    for a, b in zip(chain, chain[1:]):
        word.append("R" if b[0] == a[0] + 1 else "U")
    return "".join(word)


def multichain_count(L: VertexLattice, k: int) -> int:
    """Number of weakly increasing k-element sequences in L (exact)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1
    counts = {v: 1 for v in L.elements}
    for _ in range(k - 1):
        counts = {v: counts[v] + sum(counts[u] for u in L.down[v])
                  for v in L.elements}
    return sum(counts.values())


def chain_f_vector(L: VertexLattice) -> list[int]:
    """f_{-1}..f_{d-1} of the order complex, d = m + n + 1."""
    d = L.m + L.n + 1
    f = [1]
    counts = {v: 1 for v in L.elements}
    for _ in range(d):
        f.append(sum(counts.values()))
        counts = {v: sum(counts[u] for u in L.down[v]) for v in L.elements}
    assert sum(counts.values()) == 0, "chain longer than m+n+1 elements"
    return f
