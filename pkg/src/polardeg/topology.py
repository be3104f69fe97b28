"""Euler characteristics, top Betti numbers and minimal cell counts of
projective arrangement complements, all read off the intersection lattice.

A generic hyperplane section never gets an explicit equation here. It is
modelled by :func:`~polardeg.arrangement.truncate_generic_section`.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .arrangement import (
    Arrangement,
    IntersectionLattice,
    betti_numbers,
    poincare_projective,
    truncate_generic_section,
)


@dataclass(frozen=True)
class CWModel:
    cells: tuple[int, ...]
    euler: int

    def __post_init__(self):
        if any(c < 0 for c in self.cells):
            raise ValueError("negative cell count")
        if self.euler != sum((-1) ** k * c for k, c in enumerate(self.cells)):
            raise ValueError("euler characteristic inconsistent with cells")


@dataclass(frozen=True)
class EulerReport:
    chi_projective_complement: int
    chi_section: int
    chi_difference: int
    top_betti: int
    n: int

    @property
    def lhs(self) -> int:
        return (-1) ** self.n * self.chi_difference

    @property
    def holds(self) -> bool:
        return self.lhs == self.top_betti


@dataclass(frozen=True)
class Corollary2:
    degrees: tuple[int, ...]
    terms: tuple[int, ...]
    total: int


def _chi(L: IntersectionLattice) -> int:
    return sum((-1) ** k * b for k, b in enumerate(poincare_projective(L)))


def _top_betti(L: IntersectionLattice) -> int:
    return betti_numbers(L)[L.ambient - 1]


def euler_projective_complement(A: Arrangement) -> int:
    """chi(D(Q)), the projective Poincaré polynomial at t = -1."""
    return _chi(A.lattice)


def grad_degree_arrangement(A: Arrangement) -> int:
    """Degree of the gradient map of Q, equal to the top Betti number b_n(D(Q))."""
    return _top_betti(A.lattice)


def section_degrees(A: Arrangement) -> list[int]:
    """Gradient degrees of the generic sections of codimension 0..n.

    The last entry, a point section, is 1 by convention.
    """
    L = A.lattice
    degrees = [_top_betti(truncate_generic_section(L, i)) for i in range(A.n)]
    degrees.append(1)
    return degrees


def corollary2_sum(A: Arrangement) -> Corollary2:
    degrees = section_degrees(A)
    terms = tuple((-1) ** (A.n - i) * deg for i, deg in enumerate(degrees))
    return Corollary2(tuple(degrees), terms, sum(terms))


def lemma5_check(A: Arrangement) -> EulerReport:
    L = A.lattice
    chi = _chi(L)
    chi_sec = _chi(truncate_generic_section(L, 1))
    return EulerReport(chi, chi_sec, chi - chi_sec, _top_betti(L), A.n)


def minimal_cw_model(A: Arrangement) -> CWModel:
    cells = tuple(betti_numbers(A.lattice))
    return CWModel(cells, sum((-1) ** k * c for k, c in enumerate(cells)))


def polar_invariant(A: Arrangement) -> int:
    """Polar invariant of the Milnor fiber Q = 1, i.e. d times the gradient degree."""
    return A.d * grad_degree_arrangement(A)


def invariants_report(A: Arrangement) -> dict:
    """The JSON-facing invariants summary."""
    cor2 = corollary2_sum(A)
    l5 = lemma5_check(A)
    return {
        "chi": euler_projective_complement(A),
        "betti": list(minimal_cw_model(A).cells),
        "grad_degree": grad_degree_arrangement(A),
        "polar_invariant": polar_invariant(A),
        "corollary2": {"terms": list(cor2.terms), "sum": cor2.total},
        "lemma5": {"lhs": l5.lhs, "rhs": l5.top_betti},
    }


def euler_report_dict(report: EulerReport) -> dict:
    return asdict(report)
