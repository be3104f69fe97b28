"""Cross-checks of every identity on one arrangement, across all oracles."""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrangement import Arrangement, is_essential
from .gradflow import MAX_NVARS, GradientOracleError, grad_fiber_consensus
from .milnor import morse_cell_count
from .regions import MAX_DIM, MAX_HYPERPLANES, enumerate_regions, generic_decone, zaslavsky_counts
from .topology import (
    corollary2_sum,
    euler_projective_complement,
    grad_degree_arrangement,
    lemma5_check,
    minimal_cw_model,
)

PASS, FAIL, SKIPPED, ERROR, INCONCLUSIVE = "pass", "fail", "skipped", "error", "inconclusive"


@dataclass
class Check:
    status: str
    lhs: int | None = None
    rhs: int | None = None
    note: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        out = {"pass": self.passed, "status": self.status, "lhs": self.lhs, "rhs": self.rhs}
        if self.note:
            out["note"] = self.note
        out.update(self.extra)
        return out


def _compare(lhs, rhs, **extra) -> Check:
    return Check(PASS if lhs == rhs else FAIL, lhs, rhs, extra=extra)


@dataclass
class VerifyReport:
    checks: dict[str, Check]

    @property
    def overall(self) -> bool:
        return all(c.status in (PASS, SKIPPED) for c in self.checks.values())

    @property
    def exit_code(self) -> int:
        statuses = {c.status for c in self.checks.values()}
        if FAIL in statuses:
            return 1
        if INCONCLUSIVE in statuses or ERROR in statuses:
            return 3
        return 0

    def to_json(self) -> dict:
        out = {name: c.to_json() for name, c in self.checks.items()}
        out["overall"] = self.overall
        return out


def run_verify(
    A: Arrangement,
    seed: int = 0,
    all_oracles: bool = False,
    homotopy: bool = True,
) -> VerifyReport:
    """Run every applicable identity check on ``A``.

    The homotopy oracle runs by default for n <= 2 and d <= 6; ``all_oracles``
    extends it to every input inside the tracker's variable limit.
    """
    checks: dict[str, Check] = {}
    degree = grad_degree_arrangement(A)
    chi = euler_projective_complement(A)

    cor2 = corollary2_sum(A)
    checks["corollary2"] = _compare(cor2.total, chi, terms=list(cor2.terms))

    l5 = lemma5_check(A)
    checks["lemma5"] = _compare(l5.lhs, l5.top_betti)

    cw = minimal_cw_model(A)
    shape_ok = cw.cells[0] == 1 and cw.cells[1] == A.d - 1
    check = _compare(cw.euler, chi, cells=list(cw.cells))
    if not shape_ok:
        check.status = FAIL
        check.note = "cells[0] must be 1 and cells[1] must be d-1"
    checks["cw_consistency"] = check

    checks["milnor_e1"] = _compare(morse_cell_count(A, 1), degree)

    essential = is_essential(A)
    if A.n <= MAX_DIM and A.d <= MAX_HYPERPLANES:
        try:
            affine = generic_decone(A, seed)
        except RuntimeError as exc:
            checks["corollary4_bridge"] = Check(ERROR, note=str(exc))
            checks["zaslavsky_agreement"] = Check(ERROR, note=str(exc))
        else:
            z = zaslavsky_counts(affine)
            bridge = _compare(z.bounded, degree, essential=essential)
            if (degree > 0) != essential:
                bridge.status = FAIL
                bridge.note = "positive degree must coincide with essentiality"
            checks["corollary4_bridge"] = bridge
            enum = enumerate_regions(affine)
            agree = _compare(
                enum.regions, z.regions, bounded=[enum.bounded, z.bounded]
            )
            if enum.bounded != z.bounded:
                agree.status = FAIL
            checks["zaslavsky_agreement"] = agree
    else:
        note = f"region oracle limited to n <= {MAX_DIM}, d <= {MAX_HYPERPLANES}"
        checks["corollary4_bridge"] = Check(SKIPPED, note=note)
        checks["zaslavsky_agreement"] = Check(SKIPPED, note=note)

    applicable = A.d >= 2 and A.nvars <= MAX_NVARS and (all_oracles or (A.n <= 2 and A.d <= 6))
    if not homotopy or not applicable:
        checks["homotopy_agreement"] = Check(SKIPPED, note="homotopy oracle not applicable")
    else:
        try:
            count, runs = grad_fiber_consensus(A.polynomial(), (seed, seed + 1, seed + 2))
        except GradientOracleError as exc:
            checks["homotopy_agreement"] = Check(ERROR, note=str(exc))
        else:
            per_seed = [r.distinct_solutions for r in runs]
            if count is None:
                flags = sorted({f for r in runs for f in r.flags})
                checks["homotopy_agreement"] = Check(
                    INCONCLUSIVE, None, degree, note=",".join(flags) or "seeds disagree", per_seed=per_seed
                )
            else:
                checks["homotopy_agreement"] = _compare(
                    count, degree, max_residual=max(r.max_residual for r in runs), per_seed=per_seed
                )
    return VerifyReport(checks)
