"""Central hyperplane arrangements and their intersection lattices.

A projective arrangement in P^n is stored as its cone: ``d`` linear forms in
``n + 1`` variables. Flats are identified by the RREF basis of the span of
the forms vanishing on them, so two subfamilies cutting out the same
subspace always collapse to one flat.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .core.linalg import in_row_space, pivot_columns, rank, row_space_basis
from .core.poly import HomogeneousPoly

Row = tuple[Fraction, ...]


class ArrangementError(ValueError):
    pass


class LatticeError(RuntimeError):
    """Raised when lattice data violates an identity it must satisfy."""


@dataclass(frozen=True)
class Flat:
    key: tuple[Row, ...]
    rank: int
    members: frozenset[int]

    def __lt__(self, other: "Flat") -> bool:
        return self.members < other.members

    def __le__(self, other: "Flat") -> bool:
        return self.members <= other.members


@dataclass(frozen=True)
class Arrangement:
    """Hyperplanes ``l_i(x) = 0`` of P^n given by rational coefficient rows."""

    n: int
    forms: tuple[Row, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        forms = tuple(tuple(Fraction(c) for c in f) for f in self.forms)
        object.__setattr__(self, "forms", forms)
        if self.n < 1:
            raise ArrangementError("projective dimension must be at least 1")
        if not forms:
            raise ArrangementError("arrangement needs at least one hyperplane")
        for i, f in enumerate(forms, 1):
            if len(f) != self.n + 1:
                raise ArrangementError(f"form {i} has {len(f)} coefficients, expected {self.n + 1}")
            if not any(f):
                raise ArrangementError(f"form {i} is zero")
        for i in range(len(forms)):
            for j in range(i + 1, len(forms)):
                if rank([forms[i], forms[j]]) < 2:
                    raise ArrangementError(f"proportional forms {i + 1},{j + 1}")
        if self.labels is not None and len(self.labels) != len(forms):
            raise ArrangementError("label count does not match form count")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], labels=None) -> "Arrangement":
        rows = [tuple(r) for r in rows]
        if not rows:
            raise ArrangementError("arrangement needs at least one hyperplane")
        return cls(len(rows[0]) - 1, tuple(rows), labels)

    @property
    def d(self) -> int:
        return len(self.forms)

    @property
    def nvars(self) -> int:
        return self.n + 1

    @cached_property
    def rank(self) -> int:
        return rank(self.forms)

    @cached_property
    def lattice(self) -> "IntersectionLattice":
        return build_lattice(self)

    def polynomial(self) -> HomogeneousPoly:
        """The defining product ``Q = l_1 * ... * l_d``."""
        return HomogeneousPoly.product(HomogeneousPoly.linear(f) for f in self.forms)

    def deleted(self, index: int) -> "Arrangement":
        rows = self.forms[:index] + self.forms[index + 1:]
        return Arrangement(self.n, rows)


@dataclass(frozen=True)
class IntersectionLattice:
    """Flats of a central arrangement in C^ambient ordered by reverse inclusion.

    ``below[i]`` holds the indices of flats strictly below ``flats[i]``.
    """

    ambient: int
    flats: tuple[Flat, ...]
    below: tuple[frozenset[int], ...]
    mobius: tuple[int, ...]

    @property
    def top_rank(self) -> int:
        return max(f.rank for f in self.flats)

    def dim(self, flat: Flat) -> int:
        return self.ambient - flat.rank

    def rank_profile(self) -> tuple[int, ...]:
        out = [0] * (self.top_rank + 1)
        for f in self.flats:
            out[f.rank] += 1
        return tuple(out)

    def whitney(self) -> tuple[int, ...]:
        """Signed Whitney numbers of the first kind, indexed by rank."""
        out = [0] * (self.top_rank + 1)
        for f, m in zip(self.flats, self.mobius):
            out[f.rank] += m
        return tuple(out)

    def mobius_of(self, flat: Flat) -> int:
        return self.mobius[self.flats.index(flat)]

    def find(self, members) -> Flat:
        members = frozenset(members)
        for f in self.flats:
            if f.members == members:
                return f
        raise KeyError(members)


def _order(flats: Sequence[Flat]) -> tuple[frozenset[int], ...]:
    return tuple(
        frozenset(j for j, y in enumerate(flats) if y.members < x.members) for x in flats
    )


def mobius(flats: Sequence[Flat], below: Sequence[frozenset[int]]) -> tuple[int, ...]:
    """Möbius values ``mu(0, X)`` from the bottom; flats must be sorted by rank."""
    mu: list[int] = []
    for i, x in enumerate(flats):
        if not below[i]:
            mu.append(1)
        else:
            mu.append(-sum(mu[j] for j in below[i]))
    return tuple(mu)


def build_lattice(A: Arrangement) -> IntersectionLattice:
    """Breadth-first closure: extend each flat of rank k by one more hyperplane."""
    forms = A.forms
    bottom = Flat((), 0, frozenset())
    levels = [[bottom]]
    seen = {(): bottom}
    while True:
        nxt: dict[tuple, Flat] = {}
        for flat in levels[-1]:
            for j, form in enumerate(forms):
                if j in flat.members:
                    continue
                basis = row_space_basis(list(flat.key) + [form])
                if basis in seen or basis in nxt:
                    continue
                piv = pivot_columns(basis)
                members = frozenset(
                    i for i, g in enumerate(forms) if in_row_space(basis, piv, g)
                )
                nxt[basis] = Flat(basis, len(basis), members)
        if not nxt:
            break
        seen.update(nxt)
        levels.append(sorted(nxt.values(), key=lambda f: sorted(f.members)))
    flats = tuple(f for level in levels for f in level)
    below = _order(flats)
    return IntersectionLattice(A.nvars, flats, below, mobius(flats, below))


@dataclass(frozen=True)
class CharPoly:
    """Integer coefficients, ``coeffs[k]`` multiplying ``t**k``."""

    coeffs: tuple[int, ...]

    def __call__(self, t):
        return sum(c * t**k for k, c in enumerate(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        return " + ".join(f"{c}*t^{k}" for k, c in reversed(list(enumerate(self.coeffs))) if c)


def _lattice(obj) -> IntersectionLattice:
    return obj.lattice if isinstance(obj, Arrangement) else obj


def char_poly(A: Arrangement | IntersectionLattice) -> CharPoly:
    L = _lattice(A)
    coeffs = [0] * (L.ambient + 1)
    for f, m in zip(L.flats, L.mobius):
        coeffs[L.dim(f)] += m
    return CharPoly(tuple(coeffs))


def poincare_affine(A: Arrangement | IntersectionLattice) -> list[int]:
    L = _lattice(A)
    return [abs(w) for w in L.whitney()]


def poincare_projective(A: Arrangement | IntersectionLattice) -> list[int]:
    """Poincaré polynomial of the projective complement, low degree first.

    The cone complement is a product of the projective complement with C^*,
    so the affine Poincaré polynomial is divisible by ``1 + t``.
    """
    pi = poincare_affine(A)
    if len(pi) < 2:
        raise LatticeError("empty arrangement has no projective complement")
    quotient: list[int] = []
    carry = 0
    for c in pi[:-1]:
        q = c - carry
        quotient.append(q)
        carry = q
    if pi[-1] != carry:
        raise LatticeError(f"Poincaré polynomial {pi} not divisible by 1+t")
    return quotient


def betti_numbers(A: Arrangement | IntersectionLattice) -> list[int]:
    """``b_0..b_n`` of the projective complement, zero padded to length n+1."""
    L = _lattice(A)
    pi = poincare_projective(L)
    n = L.ambient - 1
    return pi + [0] * (n + 1 - len(pi))


def is_essential(A: Arrangement) -> bool:
    return A.rank == A.nvars


def truncate_generic_section(L: IntersectionLattice, i: int) -> IntersectionLattice:
    """Lattice of the arrangement cut by a generic codimension-``i`` subspace.

    Flats of rank below the new top rank survive unchanged; everything above
    collapses onto one top flat whose Möbius value restores the zero sum.
    """
    n = L.ambient - 1
    if not 0 <= i <= n:
        raise ValueError(f"section codimension {i} outside 0..{n}")
    if i == 0:
        return L
    ambient = L.ambient - i
    cut = min(L.top_rank, ambient)
    keep = [k for k, f in enumerate(L.flats) if f.rank < cut]
    full = max(L.flats, key=lambda f: (f.rank, len(f.members)))
    top = Flat(full.key, cut, full.members)
    flats = tuple(L.flats[k] for k in keep) + (top,)
    remap = {old: new for new, old in enumerate(keep)}
    below = tuple(frozenset(remap[j] for j in L.below[k]) for k in keep) + (
        frozenset(range(len(keep))),
    )
    mu = tuple(L.mobius[k] for k in keep)
    mu = mu + (-sum(mu),)
    return IntersectionLattice(ambient, flats, below, mu)
