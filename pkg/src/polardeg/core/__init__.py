"""Exact arithmetic substrate: rational matrices and homogeneous polynomials."""

from .linalg import RatMatrix, nullspace, rank, rref, row_space_basis
from .poly import (
    HomogeneousPoly,
    PolySyntaxError,
    evaluate,
    is_reduced,
    parse_poly,
    partial_derivative,
)

__all__ = [
    "HomogeneousPoly",
    "PolySyntaxError",
    "RatMatrix",
    "evaluate",
    "is_reduced",
    "nullspace",
    "parse_poly",
    "partial_derivative",
    "rank",
    "rref",
    "row_space_basis",
]
