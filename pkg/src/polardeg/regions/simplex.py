"""Two-phase tableau simplex over :class:`fractions.Fraction`.

Bland's rule is used in both phases, so the method terminates on degenerate
problems. Only the dense, tiny LPs of region enumeration are in scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    pv = T[r][c]
    if pv != 1:
        T[r] = [v / pv for v in T[r]]
    prow = T[r]
    for i, row in enumerate(T):
        if i != r and row[c] != 0:
            f = row[c]
            T[i] = [a - f * b for a, b in zip(row, prow)]
    basis[r] = c


def _run(T: list[list[Fraction]], basis: list[int], cost: Sequence[Fraction], allowed: int) -> bool:
    """Maximize ``cost`` over columns ``< allowed``; False if unbounded."""
    m = len(T)
    while True:
        entering = None
        for j in range(allowed):
            rc = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(m) if T[i][j])
            if rc > 0:
                entering = j
                break
        if entering is None:
            return True
        leave = None
        best = None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return False
        _pivot(T, basis, leave, entering)


def maximize(c: Sequence, A_ub: Sequence[Sequence], b_ub: Sequence) -> LPResult:
    """Maximize ``c @ x`` subject to ``A_ub @ x <= b_ub`` with ``x`` free."""
    c = [Fraction(v) for v in c]
    A = [[Fraction(v) for v in row] for row in A_ub]
    b = [Fraction(v) for v in b_ub]
    n = len(c)
    m = len(A)
    if m == 0:
        if any(c):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, Fraction(0), tuple([Fraction(0)] * n))
    # columns: u (n), v (n), slacks (m), artificials (one per negative rhs)
    neg = [i for i in range(m) if b[i] < 0]
    nart = len(neg)
    ncols = 2 * n + m + nart
    T: list[list[Fraction]] = []
    basis: list[int] = []
    art_of = {i: 2 * n + m + k for k, i in enumerate(neg)}
    for i in range(m):
        row = A[i] + [-v for v in A[i]] + [Fraction(int(k == i)) for k in range(m)]
        row += [Fraction(0)] * nart + [b[i]]
        if b[i] < 0:
            row = [-v for v in row]
            row[art_of[i]] = Fraction(1)
            basis.append(art_of[i])
        else:
            basis.append(2 * n + i)
        T.append(row)

    if nart:
        phase1 = [Fraction(0)] * (2 * n + m) + [Fraction(-1)] * nart
        _run(T, basis, phase1, ncols)
        if sum(T[i][-1] for i in range(m) if basis[i] >= 2 * n + m) > 0:
            return LPResult(INFEASIBLE)
        for r in range(len(T) - 1, -1, -1):
            if basis[r] < 2 * n + m:
                continue
            col = next((j for j in range(2 * n + m) if T[r][j] != 0), None)
            if col is None:
                del T[r]
                del basis[r]
            else:
                _pivot(T, basis, r, col)
        T = [row[: 2 * n + m] + [row[-1]] for row in T]

    cost = c + [-v for v in c] + [Fraction(0)] * m
    if not _run(T, basis, cost, 2 * n + m):
        return LPResult(UNBOUNDED)
    y = [Fraction(0)] * (2 * n + m)
    for i, j in enumerate(basis):
        y[j] = T[i][-1]
    x = tuple(y[j] - y[n + j] for j in range(n))
    return LPResult(OPTIMAL, sum(ci * xi for ci, xi in zip(c, x)), x)
