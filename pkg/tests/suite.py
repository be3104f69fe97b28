"""Shared arrangements: the acceptance suite plus a few non-essential extras."""

from fractions import Fraction

from polardeg import generators
from polardeg.arrangement import Arrangement, is_essential

# two hand-picked rational line arrangements with triple points and a pencil
RATIONAL_LINES_A = Arrangement.from_rows(
    [[1, 0, 0], [0, 1, 0], [1, -1, 0], [Fraction(1, 2), Fraction(1, 3), -1], [0, 1, Fraction(-5, 2)], [3, 0, Fraction(7, 4)]]
)
RATIONAL_LINES_B = Arrangement.from_rows(
    [[1, 1, 0], [1, Fraction(-2, 3), 0], [2, 1, 1], [0, 0, 1], [Fraction(1, 5), 1, -1]]
)

ESSENTIAL = {
    "boolean-1": generators.boolean(1),
    "boolean-2": generators.boolean(2),
    "boolean-3": generators.boolean(3),
    **{f"generic-lines-{d}": generators.generic_lines(d, seed=0) for d in range(3, 8)},
    "braid-cone-3": generators.braid_cone(3),
    "random-lines-5": generators.random_arrangement(2, 5, seed=2, coeff=2),
    "random-lines-6": generators.random_arrangement(2, 6, seed=1, coeff=2),
    "rational-lines-a": RATIONAL_LINES_A,
    "rational-lines-b": RATIONAL_LINES_B,
    "generic-planes-5": generators.generic_hyperplanes(3, 5, seed=0),
    "braid-cone-4": generators.braid_cone(4),
}

NON_ESSENTIAL = {
    "braid-3": generators.braid(3),
    "braid-4": generators.braid(4),
    "pencil": Arrangement.from_rows([[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0]]),
    "single-plane": Arrangement.from_rows([[0, 1, 1, 0]]),
}

SUITE = {**ESSENTIAL, **NON_ESSENTIAL}

assert all(is_essential(A) for A in ESSENTIAL.values())
assert not any(is_essential(A) for A in NON_ESSENTIAL.values())


def homotopy_subset():
    return {k: A for k, A in ESSENTIAL.items() if A.n <= 2 and A.d <= 6}


# >= 15 real affine arrangements (rows a_1 .. a_n b) with parallels, pencils, and mixed degeneracies
AFFINE = {
    "point": [[1, 0]],
    "two-points": [[1, 0], [1, 1]],
    "three-points": [[1, 0], [2, 1], [1, -3]],
    "axes": [[1, 0, 0], [0, 1, 0]],
    "parallel-2": [[1, 0, 0], [1, 0, 1]],
    "parallel-3": [[0, 1, 0], [0, 1, 1], [0, 1, -2]],
    "two-parallel-families": [[1, 0, 0], [1, 0, 1], [0, 1, 0], [0, 1, 1]],
    "pencil-3": [[1, 0, 0], [0, 1, 0], [1, 1, 0]],
    "pencil-4": [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 0]],
    "pencil-plus-line": [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 5]],
    "pencil-plus-parallel": [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 1, 2]],
    "triangle": [[1, 0, 0], [0, 1, 0], [1, 1, 1]],
    "five-generic": [[1, 0, 0], [0, 1, 0], [1, 1, 3], [1, -1, 1], [2, 1, 7]],
    "six-mixed": [[1, 0, 0], [1, 0, 2], [0, 1, 0], [1, 1, 2], [1, -1, 0], [Fraction(1, 2), 1, 1]],
    "coordinate-planes": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]],
    "plane-cube": [[1, 0, 0, 0], [1, 0, 0, 1], [0, 1, 0, 0], [0, 1, 0, 1], [0, 0, 1, 0], [0, 0, 1, 1]],
    "plane-pencil": [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]],
    "tetrahedron": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 1]],
    "planes-mixed": [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [1, 1, 1, 2], [1, -1, 1, 0]],
}
