"""Real affine arrangements: exact region enumeration and Zaslavsky counts.

For an arrangement with real forms, the complement of a generic affine chart
of P^n has ``(-1)^n chi(D(Q) \\ H)`` bounded chambers, which gives a purely
geometric check on the top Betti number computed from the lattice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..arrangement import Arrangement
from ..core.linalg import in_row_space, nullspace, pivot_columns, rank, row_space_basis
from .simplex import OPTIMAL, maximize

__all__ = [
    "AffineArrangement",
    "RegionReport",
    "ScaleError",
    "enumerate_regions",
    "generic_decone",
    "zaslavsky_counts",
]

MAX_DIM = 3
MAX_HYPERPLANES = 12

Sign = tuple[int, ...]


class ScaleError(ValueError):
    pass


@dataclass(frozen=True)
class AffineArrangement:
    """Hyperplanes ``normal . x = offset`` in R^n."""

    n: int
    hyperplanes: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    def __post_init__(self):
        hps = tuple(
            (tuple(Fraction(a) for a in normal), Fraction(off)) for normal, off in self.hyperplanes
        )
        object.__setattr__(self, "hyperplanes", hps)
        if self.n < 1:
            raise ValueError("ambient dimension must be at least 1")
        for i, (normal, _) in enumerate(hps, 1):
            if len(normal) != self.n:
                raise ValueError(f"hyperplane {i} has {len(normal)} coefficients, expected {self.n}")
            if not any(normal):
                raise ValueError(f"hyperplane {i} has zero normal")
        aug = [normal + (off,) for normal, off in hps]
        for i in range(len(aug)):
            for j in range(i + 1, len(aug)):
                if rank([aug[i], aug[j]]) < 2:
                    raise ValueError(f"repeated hyperplanes {i + 1},{j + 1}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "AffineArrangement":
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("need at least one hyperplane")
        return cls(len(rows[0]) - 1, tuple((tuple(r[:-1]), r[-1]) for r in rows))

    @property
    def d(self) -> int:
        return len(self.hyperplanes)

    def is_essential(self) -> bool:
        return rank([normal for normal, _ in self.hyperplanes]) == self.n


@dataclass(frozen=True)
class RegionReport:
    regions: int
    bounded: int
    sign_vectors: tuple[Sign, ...] | None = field(default=None, compare=False)

    def to_json(self, with_signs: bool = False) -> dict:
        out = {"regions": self.regions, "bounded": self.bounded}
        if with_signs and self.sign_vectors is not None:
            out["sign_vectors"] = ["".join("+" if s > 0 else "-" for s in sv) for sv in self.sign_vectors]
        return out


# --- decone ------------------------------------------------------------------

def _avoids_flats(A: Arrangement, r: Sequence[Fraction]) -> bool:
    """True iff the hyperplane ``r . x = 0`` contains no proper flat of L(A)."""
    for flat in A.lattice.flats:
        if flat.rank == 0 or flat.rank == A.nvars:
            continue
        if in_row_space(flat.key, pivot_columns(flat.key), r):
            return False
    return True


def generic_decone(A: Arrangement, seed: int = 0, retries: int = 64) -> AffineArrangement:
    """Affine arrangement cut out by A on a verified-generic chart ``r . x = 1``."""
    rng = random.Random(seed)
    for _ in range(retries):
        r = [Fraction(rng.randint(-7, 7)) for _ in range(A.nvars)]
        if any(r) and _avoids_flats(A, r):
            return decone(A, r)
    raise RuntimeError("no generic chart found within retry budget")


def decone(A: Arrangement, r: Sequence) -> AffineArrangement:
    r = [Fraction(v) for v in r]
    k = next(i for i, v in enumerate(r) if v != 0)
    base = [Fraction(0)] * A.nvars
    base[k] = 1 / r[k]
    kernel = nullspace([r], A.nvars)
    hps = []
    for form in A.forms:
        normal = tuple(sum(a * v for a, v in zip(form, vec)) for vec in kernel)
        offset = -sum(a * p for a, p in zip(form, base))
        hps.append((normal, offset))
    return AffineArrangement(A.n, tuple(hps))


# --- enumeration by exact LP ----------------------------------------------------

def _cell_point(hps, signs: Sign, n: int):
    """Interior point of the open cell, or None if the cell is empty."""
    # variables (x, eps): maximize eps subject to s_i (a_i x - b_i) >= eps, eps <= 1
    A_ub = []
    b_ub = []
    for (normal, off), s in zip(hps, signs):
        A_ub.append([-s * a for a in normal] + [Fraction(1)])
        b_ub.append(-s * off)
    A_ub.append([Fraction(0)] * n + [Fraction(1)])
    b_ub.append(Fraction(1))
    res = maximize([Fraction(0)] * n + [Fraction(1)], A_ub, b_ub)
    if res.status != OPTIMAL or res.value <= 0:
        return None
    return res.x[:n]


def _is_bounded(hps, signs: Sign, n: int) -> bool:
    A_ub = [[-s * a for a in normal] for (normal, _), s in zip(hps, signs)]
    b_ub = [-s * off for (_, off), s in zip(hps, signs)]
    for j in range(n):
        for direction in (1, -1):
            c = [Fraction(0)] * n
            c[j] = Fraction(direction)
            if maximize(c, A_ub, b_ub).status != OPTIMAL:
                return False
    return True


def _side(hp, point) -> int:
    normal, off = hp
    v = sum(a * x for a, x in zip(normal, point)) - off
    return (v > 0) - (v < 0)


def enumerate_regions(A_aff: AffineArrangement, order: Sequence[int] | None = None) -> RegionReport:
    """Insert hyperplanes one at a time, splitting every open cell they cut.

    Each surviving cell keeps an interior witness, so only the side of a new
    hyperplane not containing the witness needs an LP. ``order`` permutes the
    insertion sequence; sign vectors are always reported in input order.
    """
    n, d = A_aff.n, A_aff.d
    if n > MAX_DIM or d > MAX_HYPERPLANES:
        raise ScaleError(f"region enumeration limited to n <= {MAX_DIM}, d <= {MAX_HYPERPLANES}")
    order = list(range(d)) if order is None else list(order)
    if sorted(order) != list(range(d)):
        raise ValueError("order must be a permutation of the hyperplane indices")
    hps = [A_aff.hyperplanes[i] for i in order]
    cells: list[tuple[Sign, tuple]] = [((), tuple([Fraction(0)] * n))]
    for k, hp in enumerate(hps):
        nxt = []
        active = hps[: k + 1]
        for signs, point in cells:
            side = _side(hp, point)
            if side:
                nxt.append((signs + (side,), point))
                other = signs + (-side,)
                witness = _cell_point(active, other, n)
                if witness is not None:
                    nxt.append((other, witness))
            else:
                for s in (1, -1):
                    witness = _cell_point(active, signs + (s,), n)
                    if witness is not None:
                        nxt.append((signs + (s,), witness))
        cells = nxt
    inverse = sorted(range(d), key=lambda i: order[i])
    sign_vectors = sorted(tuple(signs[i] for i in inverse) for signs, _ in cells)
    bounded = sum(1 for sv in sign_vectors if _is_bounded(A_aff.hyperplanes, sv, n))
    return RegionReport(len(sign_vectors), bounded, tuple(sign_vectors))


# --- Zaslavsky via the intersection semilattice -----------------------------

@dataclass(frozen=True)
class AffineFlat:
    key: tuple
    rank: int
    members: frozenset[int]


def affine_semilattice(A_aff: AffineArrangement) -> tuple[list[AffineFlat], list[int]]:
    """Nonempty intersections and their Möbius values, sorted by rank."""
    n = A_aff.n
    aug = [normal + (off,) for normal, off in A_aff.hyperplanes]
    bottom = AffineFlat((), 0, frozenset())
    levels = [[bottom]]
    seen = {()}
    while True:
        nxt: dict[tuple, AffineFlat] = {}
        for flat in levels[-1]:
            for j, row in enumerate(aug):
                if j in flat.members:
                    continue
                basis = row_space_basis(list(flat.key) + [row])
                piv = pivot_columns(basis)
                if piv[-1] == n:
                    continue  # inconsistent: empty intersection
                if basis in seen or basis in nxt:
                    continue
                members = frozenset(i for i, g in enumerate(aug) if in_row_space(basis, piv, g))
                nxt[basis] = AffineFlat(basis, len(basis), members)
        if not nxt:
            break
        seen.update(nxt)
        levels.append(sorted(nxt.values(), key=lambda f: sorted(f.members)))
    flats = [f for level in levels for f in level]
    mu: list[int] = []
    for x in flats:
        lower = [m for y, m in zip(flats, mu) if y.members < x.members]
        mu.append(1 if not x.members else -sum(lower))
    return flats, mu


def affine_char_poly(A_aff: AffineArrangement) -> tuple[int, ...]:
    flats, mu = affine_semilattice(A_aff)
    coeffs = [0] * (A_aff.n + 1)
    for f, m in zip(flats, mu):
        coeffs[A_aff.n - f.rank] += m
    return tuple(coeffs)


@dataclass(frozen=True)
class ZaslavskyCounts:
    regions: int
    bounded: int
    essential: bool

    def __iter__(self):
        return iter((self.regions, self.bounded))


def zaslavsky_counts(A_aff: AffineArrangement) -> ZaslavskyCounts:
    chi = affine_char_poly(A_aff)
    sign = (-1) ** A_aff.n
    regions = sign * sum(c * (-1) ** k for k, c in enumerate(chi))
    essential = A_aff.is_essential()
    bounded = sign * sum(chi) if essential else 0
    return ZaslavskyCounts(regions, bounded, essential)
