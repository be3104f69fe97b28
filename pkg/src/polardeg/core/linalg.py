"""Exact dense linear algebra over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = tuple[Fraction, ...]


class RatMatrix:
    """Immutable row-major matrix of reduced rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data: Sequence[Sequence]):
        rows = [tuple(Fraction(v) for v in r) for r in data]
        if not rows or not rows[0]:
            raise ValueError("matrix must have positive dimensions")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = width
        self.entries: tuple[Row, ...] = tuple(rows)

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in r) for r in self.entries)
        return f"RatMatrix([{body}])"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def _rref_rows(rows: list[list[Fraction]]) -> tuple[int, list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan elimination; returns (rank, rows, pivot columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [v / pv for v in rows[r]]
        pivot_row = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return r, rows, pivots


def rref(m: RatMatrix) -> tuple[int, RatMatrix]:
    """Reduced row-echelon form and rank of ``m``.

    Zero rows are kept at the bottom so the shape of ``m`` is preserved.
    """
    rank, rows, _ = _rref_rows(m.tolist())
    return rank, RatMatrix(rows)


def rank(rows: Sequence[Sequence]) -> int:
    rows = [[Fraction(v) for v in r] for r in rows]
    if not rows:
        return 0
    return _rref_rows(rows)[0]


def row_space_basis(rows: Sequence[Sequence]) -> tuple[Row, ...]:
    """Canonical basis of the row space: the nonzero rows of the RREF."""
    rows = [[Fraction(v) for v in r] for r in rows]
    if not rows:
        return ()
    k, reduced, _ = _rref_rows(rows)
    return tuple(tuple(r) for r in reduced[:k])


def in_row_space(basis: Sequence[Row], pivots: Sequence[int], vec: Sequence[Fraction]) -> bool:
    """Membership of ``vec`` in the span of an RREF ``basis`` with known pivots."""
    v = list(vec)
    for row, c in zip(basis, pivots):
        f = v[c]
        if f != 0:
            v = [a - f * b for a, b in zip(v, row)]
    return not any(v)


def pivot_columns(basis: Sequence[Row]) -> list[int]:
    return [next(j for j, v in enumerate(row) if v != 0) for row in basis]


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel ``{v : rows @ v = 0}``."""
    rows = [[Fraction(v) for v in r] for r in rows]
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    k, reduced, pivots = _rref_rows(rows)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, pc in zip(reduced[:k], pivots):
            v[pc] = -row[fcol]
        basis.append(v)
    return basis
