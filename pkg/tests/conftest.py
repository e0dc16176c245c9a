import pytest

from polyrook import classify, enumerate_fixed_polyominoes


@pytest.fixture(scope="session")
def polyominoes_by_size():
    return {n: list(enumerate_fixed_polyominoes(n)) for n in range(1, 9)}


@pytest.fixture(scope="session")
def classified_upto8(polyominoes_by_size):
    out = []
    for n in range(1, 9):
        for P in polyominoes_by_size[n]:
            out.append((P, classify(P)))
    return out


@pytest.fixture(scope="session")
def convex_sublattice_upto8(classified_upto8):
    return [(P, rep) for P, rep in classified_upto8
            if rep.hv_convex and rep.vertex_sublattice]


def naive_fixed_polyominoes(n):
    """Independent oracle: grow shapes cell by cell, dedup by the
    normalized cell set."""
    def normalize(cells):
        dx = min(i for i, _ in cells) - 1
        dy = min(j for _, j in cells) - 1
        return frozenset((i - dx, j - dy) for i, j in cells)

    shapes = {frozenset({(1, 1)})}
    for _ in range(n - 1):
        bigger = set()
        for shape in shapes:
            for i, j in shape:
                for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                    if nb not in shape:
                        bigger.add(normalize(shape | {nb}))
        shapes = bigger
    return shapes
