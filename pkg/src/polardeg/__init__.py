"""Exact and numeric invariants of hypersurface complements and arrangements.

Three independent routes compute the degree of the gradient map of an
arrangement polynomial: the intersection lattice, bounded chambers of a real
decone, and homotopy continuation on the gradient fiber.
"""

from .arrangement import (
    Arrangement,
    IntersectionLattice,
    betti_numbers,
    build_lattice,
    char_poly,
    is_essential,
    poincare_projective,
    truncate_generic_section,
)
from .core import HomogeneousPoly, parse_poly
from .milnor import milnor_report, morse_cell_count
from .topology import (
    corollary2_sum,
    euler_projective_complement,
    grad_degree_arrangement,
    lemma5_check,
    minimal_cw_model,
    polar_invariant,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "HomogeneousPoly",
    "IntersectionLattice",
    "betti_numbers",
    "build_lattice",
    "char_poly",
    "corollary2_sum",
    "euler_projective_complement",
    "grad_degree_arrangement",
    "is_essential",
    "lemma5_check",
    "milnor_report",
    "minimal_cw_model",
    "morse_cell_count",
    "parse_poly",
    "poincare_projective",
    "polar_invariant",
    "truncate_generic_section",
]
