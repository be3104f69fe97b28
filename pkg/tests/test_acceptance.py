"""Acceptance criteria 1-10, one test each.

Every test records a one-line verdict; ``conftest.py`` prints them in the
terminal summary, so a plain ``pytest`` run shows one pass/fail line per
criterion.
"""

import time

import pytest

from polardeg import generators
from polardeg.arrangement import betti_numbers, is_essential
from polardeg.core import parse_poly
from polardeg.gradflow import grad_fiber_consensus, grad_fiber_count
from polardeg.milnor import morse_cell_count, morse_cell_count_via_complement, relative_betti
from polardeg.regions import AffineArrangement, enumerate_regions, generic_decone, zaslavsky_counts
from polardeg.topology import (
    corollary2_sum,
    euler_projective_complement,
    grad_degree_arrangement,
    lemma5_check,
    minimal_cw_model,
)

from .suite import AFFINE, ESSENTIAL, NON_ESSENTIAL, SUITE, homotopy_subset

VERDICTS: dict[int, tuple[bool, str]] = {}


def record(k: int, ok: bool, detail: str) -> None:
    VERDICTS[k] = (ok, detail)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail


def _bounded(A) -> tuple[int, int]:
    D = generic_decone(A, seed=0)
    return enumerate_regions(D).bounded, zaslavsky_counts(D).bounded


def test_criterion_01_three_way_agreement():
    start = time.perf_counter()
    assert len(ESSENTIAL) >= 10
    assert all(A.n <= 3 and A.d <= 10 for A in ESSENTIAL.values())
    bad = []
    for name, A in ESSENTIAL.items():
        b = grad_degree_arrangement(A)
        if _bounded(A) != (b, b):
            bad.append(f"{name}: lattice {b}, regions {_bounded(A)}")
    numeric = {}
    for name, A in homotopy_subset().items():
        count, runs = grad_fiber_consensus(A.polynomial(), seeds=(0, 1, 2))
        numeric[name] = count
        if count != grad_degree_arrangement(A):
            bad.append(f"{name}: homotopy {[r.distinct_solutions for r in runs]}")
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        bad.append(f"suite took {elapsed:.1f}s")
    record(
        1,
        not bad,
        f"{len(ESSENTIAL)} arrangements, {len(numeric)} with homotopy, {elapsed:.1f}s" + ("; " + "; ".join(bad) if bad else ""),
    )


def test_criterion_02_boolean_degree_one():
    degrees = [grad_degree_arrangement(generators.boolean(n)) for n in range(1, 5)]
    record(2, degrees == [1, 1, 1, 1], f"degrees n=1..4: {degrees}")


def test_criterion_03_non_essential_detection():
    bad = []
    for name, A in NON_ESSENTIAL.items():
        if grad_degree_arrangement(A) != 0 or is_essential(A):
            bad.append(name)
        if zaslavsky_counts(generic_decone(A, seed=0)).bounded != 0:
            bad.append(f"{name} (regions)")
    for name, A in SUITE.items():
        if (grad_degree_arrangement(A) > 0) != is_essential(A):
            bad.append(f"{name} (equivalence)")
    h = grad_fiber_count(generators.braid(3).polynomial(), seed=0).distinct_solutions
    if h != 0:
        bad.append(f"braid-3 homotopy {h}")
    record(3, not bad, f"{len(NON_ESSENTIAL)} rank-deficient arrangements" + (": " + ", ".join(bad) if bad else ""))


def test_criterion_04_generic_lines_closed_form():
    rows = []
    for d in range(3, 8):
        A = generators.generic_lines(d, seed=0)
        want = (d - 1) * (d - 2) // 2
        rows.append((d, want, grad_degree_arrangement(A), *_bounded(A)))
    ok = all(w == a == b == c for _, w, a, b, c in rows)
    record(4, ok, "d: lattice/regions " + ", ".join(f"{d}: {a}/{b}" for d, _, a, b, _ in rows))


def test_criterion_05_section_sum():
    bad = [n for n, A in SUITE.items() if corollary2_sum(A).total != euler_projective_complement(A)]
    record(5, not bad, f"{len(SUITE)} arrangements" + (f", failing {bad}" if bad else ""))


def test_criterion_06_hyperplane_complement_euler():
    bad = [n for n, A in SUITE.items() if not lemma5_check(A).holds]
    record(6, not bad, f"{len(SUITE)} arrangements" + (f", failing {bad}" if bad else ""))


def test_criterion_07_minimal_cw_counts():
    bad = []
    for name, A in SUITE.items():
        cw = minimal_cw_model(A)
        chi = euler_projective_complement(A)
        if not (list(cw.cells) == betti_numbers(A) and cw.euler == chi and cw.cells[0] == 1 and cw.cells[1] == A.d - 1):
            bad.append(name)
    record(7, not bad, f"{len(SUITE)} arrangements" + (f", failing {bad}" if bad else ""))


def test_criterion_08_milnor_calculus():
    bad = []
    for name, A in SUITE.items():
        if morse_cell_count(A, 1) != grad_degree_arrangement(A):
            bad.append(f"{name} e=1")
        for e in range(1, 5):
            count = morse_cell_count(A, e)
            if count != morse_cell_count_via_complement(A, e):
                bad.append(f"{name} routes e={e}")
            rb = relative_betti(A, e)
            if any(rb[q] for q in range(A.n)) or rb[A.n] != count:
                bad.append(f"{name} relative betti e={e}")
    for d in range(2, 6):
        A = generators.generic_hyperplanes(1, d, seed=d)
        for e in range(1, 5):
            if morse_cell_count(A, e) != e * (e + d - 2):
                bad.append(f"points d={d} e={e}")
    record(8, not bad, f"{len(SUITE)} arrangements, e=1..4" + (f"; failing {bad}" if bad else ""))


def test_criterion_09_region_oracle_consistency():
    bad = []
    for name, rows in AFFINE.items():
        A = AffineArrangement.from_rows(rows)
        r = enumerate_regions(A)
        if (r.regions, r.bounded) != tuple(zaslavsky_counts(A)):
            bad.append(name)
    five = enumerate_regions(AffineArrangement.from_rows(AFFINE["five-generic"]))
    if (five.regions, five.bounded) != (16, 6):
        bad.append("five generic lines")
    ok = not bad and len(AFFINE) >= 15
    record(9, ok, f"{len(AFFINE)} affine arrangements, 5 generic lines -> ({five.regions}, {five.bounded})" + (f"; failing {bad}" if bad else ""))


FERMAT = {(1, 3): "x0^3 + x1^3", (1, 4): "x0^4 + x1^4", (2, 3): "x0^3 + x1^3 + x2^3"}


def test_criterion_10_fermat_ceiling():
    bad = []
    worst_res, worst_time = 0.0, 0.0
    for (n, d), text in FERMAT.items():
        h = parse_poly(text)
        for seed in (0, 1, 2):
            start = time.perf_counter()
            res = grad_fiber_count(h, seed=seed)
            elapsed = time.perf_counter() - start
            worst_res = max(worst_res, res.max_residual)
            worst_time = max(worst_time, elapsed)
            if res.distinct_solutions != (d - 1) ** n or res.max_residual >= 1e-9 or elapsed >= 5:
                bad.append(f"({n},{d}) seed {seed}: {res.distinct_solutions}, {res.max_residual:.1e}, {elapsed:.2f}s")
    record(10, not bad, f"max residual {worst_res:.1e}, slowest run {worst_time:.2f}s" + (f"; {bad}" if bad else ""))


@pytest.fixture(scope="session", autouse=True)
def _expose_verdicts(request):
    request.config._acceptance_verdicts = VERDICTS
    yield
