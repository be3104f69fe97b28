"""Standard test families of arrangements."""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

from .arrangement import Arrangement, ArrangementError


def boolean(n: int) -> Arrangement:
    """Coordinate hyperplanes of P^n; the complement is (C^*)^n."""
    return Arrangement.from_rows([[int(i == j) for j in range(n + 1)] for i in range(n + 1)])


def braid(k: int) -> Arrangement:
    """``x_i - x_j`` in k variables: rank k-1, hence never essential."""
    rows = []
    for i, j in combinations(range(k), 2):
        row = [0] * k
        row[i], row[j] = 1, -1
        rows.append(row)
    return Arrangement.from_rows(rows)


def braid_cone(k: int) -> Arrangement:
    """Essential braid arrangement: ``x_i`` and ``x_i - x_j`` in k variables."""
    rows = [[int(i == j) for j in range(k)] for i in range(k)]
    return Arrangement.from_rows(rows + [list(f) for f in braid(k).forms])


def is_generic(A: Arrangement) -> bool:
    """All rank profiles are those of d hyperplanes in general position."""
    r = min(A.d, A.nvars)
    expected = tuple(comb(A.d, k) for k in range(r)) + (1,)
    return A.lattice.rank_profile() == expected


def random_arrangement(n: int, d: int, seed: int = 0, coeff: int = 9) -> Arrangement:
    """Random integer forms with entries in ``[-coeff, coeff]``; not necessarily generic."""
    rng = random.Random(seed)
    for _ in range(1000):
        rows = [[rng.randint(-coeff, coeff) for _ in range(n + 1)] for _ in range(d)]
        try:
            return Arrangement.from_rows(rows)
        except ArrangementError:
            continue
    raise RuntimeError("could not draw a reduced arrangement")


def generic_hyperplanes(n: int, d: int, seed: int = 0) -> Arrangement:
    rng = random.Random(seed)
    for _ in range(1000):
        try:
            A = random_arrangement(n, d, rng.randrange(1 << 62))
        except RuntimeError:
            continue
        if is_generic(A):
            return A
    raise RuntimeError("could not draw a generic arrangement")


def generic_lines(d: int, seed: int = 0) -> Arrangement:
    return generic_hyperplanes(2, d, seed)


def from_spec(spec: str, seed: int = 0) -> Arrangement:
    """Parse ``boolean:<n>``, ``generic-lines:<d>``, ``generic:<n>:<d>``,
    ``braid:<k>``, ``braid-cone:<k>`` or ``random:<n>:<d>``."""
    name, _, rest = spec.partition(":")
    args = [int(a) for a in rest.split(":")] if rest else []
    table = {
        "boolean": (boolean, 1),
        "generic-lines": (lambda d: generic_lines(d, seed), 1),
        "generic": (lambda n, d: generic_hyperplanes(n, d, seed), 2),
        "braid": (braid, 1),
        "braid-cone": (braid_cone, 1),
        "random": (lambda n, d: random_arrangement(n, d, seed, coeff=2), 2),
    }
    if name not in table or len(args) != table[name][1]:
        raise ValueError(f"unknown generator {spec!r}")
    return table[name][0](*args)
