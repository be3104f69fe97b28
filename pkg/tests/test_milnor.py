import random
import warnings

import numpy as np
import pytest

from polardeg import generators
from polardeg.arrangement import Arrangement, is_essential
from polardeg.core import HomogeneousPoly, partial_derivative
from polardeg.milnor import (
    euler_milnor_fiber_arrangement,
    euler_smooth_hypersurface,
    milnor_report,
    morse_cell_count,
    morse_cell_count_via_complement,
    relative_betti,
)
from polardeg.topology import grad_degree_arrangement

from .suite import SUITE


def test_milnor_fiber_euler():
    assert euler_milnor_fiber_arrangement(generators.boolean(1)) == 0
    assert euler_milnor_fiber_arrangement(generators.boolean(2)) == 0
    four = Arrangement.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    assert euler_milnor_fiber_arrangement(four) == 4


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_smooth_hypersurface_degree_one(n):
    assert euler_smooth_hypersurface(1, n) == n


def test_smooth_hypersurface_examples():
    assert euler_smooth_hypersurface(3, 2) == 0
    assert euler_smooth_hypersurface(2, 3) == 4
    # plane curves: 2 - 2g with g = (e-1)(e-2)/2
    for e in range(1, 7):
        assert euler_smooth_hypersurface(e, 2) == 2 - (e - 1) * (e - 2)
    with pytest.raises(ValueError):
        euler_smooth_hypersurface(0, 2)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_points_closed_form(d, e):
    A = generators.generic_hyperplanes(1, d, seed=d)
    assert morse_cell_count(A, e) == e * (e + d - 2)


def test_small_examples():
    assert morse_cell_count(Arrangement.from_rows([[1, 0], [0, 1]]), 1) == 1
    assert morse_cell_count(Arrangement.from_rows([[1, 0], [0, 1], [1, 1]]), 2) == 6
    assert morse_cell_count(generators.boolean(2), 1) == 1
    four = Arrangement.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    assert milnor_report(four, 1).morse_count == 3


def test_boolean_line_report():
    rep = milnor_report(generators.boolean(1), 1)
    assert rep.chi_F_Q == 0 and rep.morse_count == 1
    assert rep.relative_betti == {0: 0, 1: 1}
    assert rep.to_json()["relative_betti"] == {"0": 0, "1": 1}


def test_rejects_degree_zero():
    with pytest.raises(ValueError):
        morse_cell_count(generators.boolean(2), 0)


# --- brute force for n = 1 -------------------------------------------------------


def _on_line(p: HomogeneousPoly) -> np.ndarray:
    """Coefficients of p(1, t), highest degree first."""
    coeffs = np.zeros(p.degree + 1)
    for (a, b), c in p.items():
        coeffs[p.degree - b] += float(c)
    return coeffs


def brute_force_critical_points(A: Arrangement, e: int, seed: int) -> int:
    """Critical points of Q on F = {f = 1} in C^2, off Q = 0, for a random f."""
    rng = random.Random(seed)
    f = HomogeneousPoly(2, {(e - k, k): rng.randint(1, 9) * rng.choice((-1, 1)) for k in range(e + 1)})
    Q = A.polynomial()
    Qx, Qy = partial_derivative(Q, 0), partial_derivative(Q, 1)
    if e == 1:
        fx = np.array([float(f.terms.get((1, 0), 0))])
        fy = np.array([float(f.terms.get((0, 1), 0))])
    else:
        fx, fy = _on_line(partial_derivative(f, 0)), _on_line(partial_derivative(f, 1))
    # the Jacobian Q_x f_y - Q_y f_x is homogeneous: its zeros are lines through 0
    jac = np.polysub(np.polymul(_on_line(Qx), fy), np.polymul(_on_line(Qy), fx))
    assert len(np.trim_zeros(jac, "f")) == A.d + e - 1  # no root at t = infinity
    points = []
    for t in np.roots(jac):
        s = complex(1 / np.polyval(_on_line(f), t)) ** (1 / e)
        for k in range(e):
            x = s * np.exp(2j * np.pi * k / e)
            pt = np.array([x, x * t])
            if abs(np.polyval(_on_line(Q), t) * x**A.d) > 1e-8:
                points.append(pt)
    for i in range(len(points)):
        for j in range(i):
            assert np.linalg.norm(points[i] - points[j]) > 1e-6
    return len(points)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_points_brute_force(d, e):
    A = generators.generic_hyperplanes(1, d, seed=d)
    assert brute_force_critical_points(A, e, seed=17 * d + e) == morse_cell_count(A, e)


# --- suite-wide identities ---------------------------------------------------------


@pytest.mark.parametrize("name", sorted(SUITE))
def test_degree_one_count_is_gradient_degree(name):
    A = SUITE[name]
    assert morse_cell_count(A, 1) == grad_degree_arrangement(A)


@pytest.mark.parametrize("name", sorted(SUITE))
@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_two_routes_agree(name, e):
    A = SUITE[name]
    assert morse_cell_count(A, e) == morse_cell_count_via_complement(A, e)


@pytest.mark.parametrize("name", sorted(SUITE))
def test_relative_betti_concentrated(name):
    A = SUITE[name]
    for e in (1, 2, 3):
        rb = relative_betti(A, e)
        assert set(rb) == set(range(A.n + 1))
        assert all(rb[q] == 0 for q in range(A.n))
        assert rb[A.n] == morse_cell_count(A, e) >= 0


def test_monotonicity_recorded():
    # observed behaviour only; a violation is reported as a warning
    for name, A in sorted(SUITE.items()):
        if not is_essential(A):
            continue
        counts = [morse_cell_count(A, e) for e in range(1, 6)]
        if any(b < a for a, b in zip(counts, counts[1:])):
            warnings.warn(f"{name}: morse counts not monotone in e: {counts}")
