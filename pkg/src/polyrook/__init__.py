"""Exact-arithmetic toolkit for h-polynomials and rook polynomials of
lattice-convex polyominoes."""

from .enumeration import enumerate_fixed_polyominoes
from .hseries import (descent_word, f_to_h, h_by_descents, h_by_fvector,
                      h_by_multichains)
from .lattice import (OmegaLabeling, VertexLattice, build_lattice,
                      chain_f_vector, linear_extension, max_chains,
                      multichain_count, step_word)
from .lproject import ferrers_projection, verify_projection
from .polyomino import (ClassReport, Polyomino, classify, from_cells,
                        join_irreducibles, parse_grid, vertex_set)
from .rook import (antidiagonal_witness, psi, psi_image_report,
                   rook_polynomial, rook_polynomial_bruteforce,
                   verify_theorem)
from .sweep import analyze_instance, records_to_csv, sweep

__all__ = [
    "ClassReport", "OmegaLabeling", "Polyomino", "VertexLattice",
    "analyze_instance", "antidiagonal_witness", "build_lattice",
    "chain_f_vector", "classify", "descent_word",
    "enumerate_fixed_polyominoes", "f_to_h", "ferrers_projection",
    "from_cells", "h_by_descents", "h_by_fvector", "h_by_multichains",
    "join_irreducibles", "linear_extension", "max_chains",
    "multichain_count", "parse_grid", "psi", "psi_image_report",
    "records_to_csv", "rook_polynomial", "rook_polynomial_bruteforce",
    "step_word", "sweep", "verify_projection", "verify_theorem",
    "vertex_set",
]
