"""Euler characteristics of Milnor fibers of arrangements and the number of
top cells attached to F ∩ N for a generic degree-e polynomial f.

No concrete f is built. A generic f is assumed, and the count it realizes is
computed from the lattice, once by a closed form and once through
complements of smooth hypersurfaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrangement import Arrangement
from .topology import euler_projective_complement


@dataclass(frozen=True)
class MilnorReport:
    d: int
    e: int
    n: int
    chi_F_Q: int
    morse_count: int
    relative_betti: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "e": self.e,
            "n": self.n,
            "chi_F_Q": self.chi_F_Q,
            "morse_count": self.morse_count,
            "relative_betti": {str(q): b for q, b in sorted(self.relative_betti.items())},
        }


def euler_milnor_fiber_arrangement(A: Arrangement) -> int:
    """chi of {Q = 1}; the fiber is a d-sheeted unramified cover of D(Q)."""
    return A.d * euler_projective_complement(A)


def euler_smooth_hypersurface(e: int, n: int) -> int:
    """chi of a smooth degree-e hypersurface in P^n (n = 0 gives the empty set)."""
    if e < 1 or n < 0:
        raise ValueError("need e >= 1 and n >= 0")
    num = (1 - e) ** (n + 1) - 1
    q, r = divmod(num, e)
    if r:
        raise ArithmeticError("non-integral Euler characteristic")
    return n + 1 + q


def _milnor_fiber_chi(e: int, m: int) -> int:
    # {f = 1} in C^m for f generic homogeneous of degree e
    return 1 - (1 - e) ** m


def morse_cell_count(A: Arrangement, e: int) -> int:
    """|C(g)| = (-1)^n chi(F \\ N) by inclusion-exclusion over the flats."""
    if e < 1:
        raise ValueError("degree e must be at least 1")
    L = A.lattice
    chi = sum(mu * _milnor_fiber_chi(e, L.dim(X)) for X, mu in zip(L.flats, L.mobius))
    count = (-1) ** A.n * chi
    if count < 0:
        raise ArithmeticError(f"negative critical point count {count}")
    return count


def _projective_minus_hypersurface(e: int, m: int) -> int:
    # chi(P^{m-1} \ V(f)) for the generic restriction of f to an m-dim flat
    if m == 0:
        return 0
    return m - euler_smooth_hypersurface(e, m - 1)


def morse_cell_count_via_complement(A: Arrangement, e: int) -> int:
    """Second route: chi(F \\ N) = e * chi(D(f) \\ N) in P^n."""
    if e < 1:
        raise ValueError("degree e must be at least 1")
    L = A.lattice
    chi = sum(
        mu * _projective_minus_hypersurface(e, L.dim(X)) for X, mu in zip(L.flats, L.mobius)
    )
    return (-1) ** A.n * e * chi


def relative_betti(A: Arrangement, e: int) -> dict[int, int]:
    """b_q(F, F ∩ N) for q = 0..n: only the top degree is nonzero."""
    count = morse_cell_count(A, e)
    return {q: (count if q == A.n else 0) for q in range(A.n + 1)}


def milnor_report(A: Arrangement, e: int) -> MilnorReport:
    return MilnorReport(
        d=A.d,
        e=e,
        n=A.n,
        chi_F_Q=euler_milnor_fiber_arrangement(A),
        morse_count=morse_cell_count(A, e),
        relative_betti=relative_betti(A, e),
    )
