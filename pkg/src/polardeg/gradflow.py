"""Numeric degree of the gradient map by homotopy continuation.

The fiber of ``grad(h)`` over a random direction ``c`` is the solution set of
the square system

    h_i(x) - lam * c_i = 0   (i = 0..n),      r . x - 1 = 0

in the unknowns ``(x, lam)``. It is reached from the total-degree start
system ``x_i^(d-1) = 1, lam = 1`` along ``(1 - t) * gamma * G + t * F``.
Endpoints on V(h) (including the base locus ``lam = 0``) are discarded.
All paths are tracked together as one numpy batch.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .core.poly import HomogeneousPoly, is_reduced

log = logging.getLogger(__name__)

MAX_NVARS = 4

ACTIVE, FINISHED, DIVERGED, FAILED = 0, 1, 2, 3


class GradientOracleError(RuntimeError):
    pass


class Inconclusive(GradientOracleError):
    """The tracker could not produce a trustworthy count."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class TrackerConfig:
    max_step: float = 0.05
    min_step: float = 1e-14
    initial_step: float = 0.01
    corrector_tol: float = 1e-12
    corrector_iters: int = 3
    first_correction: float = 1e-3
    contraction: float = 0.25
    divergence: float = 1e8
    cluster_tol: float = 1e-6
    membership_tol: float = 1e-12
    residual_tol: float = 1e-9
    sharpen_iters: int = 6
    stall_window: float = 1e-4
    stall_divergence: float = 1e4
    regular_cond: float = 1e10
    retries: int = 3
    max_iterations: int = 20000


@dataclass
class HomotopyResult:
    raw_paths: int
    converged: int
    discarded_diverged: int
    failed: int
    discarded_on_V_h: int
    distinct_solutions: int | None
    max_residual: float
    flags: list[str] = field(default_factory=list)
    seed: int = 0
    attempts: int = 1
    seconds: float = 0.0
    paths: list[dict] | None = None

    @property
    def ambiguous(self) -> bool:
        return any(f.startswith(("cluster_ambiguity", "membership_ambiguity", "duplicate_endpoint", "failed_paths")) for f in self.flags)

    def to_json(self, verbose: bool = False) -> dict:
        out = asdict(self)
        if not verbose:
            out.pop("paths")
        return out


# --- compiled polynomials ---------------------------------------------------

class _Compiled:
    """Batched evaluator for a list of polynomials sharing variable count."""

    def __init__(self, polys: list[dict], nvars: int):
        exps = sorted({e for p in polys for e in p})
        if not exps:
            exps = [(0,) * nvars]
        index = {e: k for k, e in enumerate(exps)}
        self.exps = np.array(exps, dtype=np.int64).reshape(len(exps), nvars)
        self.coeffs = np.zeros((len(exps), len(polys)), dtype=complex)
        for j, p in enumerate(polys):
            for e, c in p.items():
                self.coeffs[index[e], j] = complex(c)

    def __call__(self, X: np.ndarray) -> np.ndarray:
        mono = np.prod(X[:, None, :] ** self.exps[None, :, :], axis=2)
        return mono @ self.coeffs


def _diff(terms: dict, i: int) -> dict:
    out = {}
    for e, c in terms.items():
        if e[i]:
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = c * e[i]
    return out


@dataclass
class GradientSystem:
    h: HomogeneousPoly
    target: np.ndarray
    chart: np.ndarray
    partials: list[dict] = field(init=False)

    def __post_init__(self):
        nv = self.h.nvars
        # rescaling h leaves grad(h) unchanged and keeps float magnitudes near 1
        top = max(abs(c) for c in self.h.terms.values())
        terms = {e: c / top for e, c in self.h.terms.items()}
        self.partials = [_diff(terms, i) for i in range(nv)]
        self._grad = _Compiled(self.partials, nv)
        self._hess = _Compiled([_diff(p, j) for p in self.partials for j in range(nv)], nv)
        self._h = _Compiled([terms], nv)

    @property
    def nvars(self) -> int:
        return self.h.nvars

    def h_values(self, X):
        return self._h(X)[:, 0]

    def F(self, Z):
        nv = self.nvars
        X, lam = Z[:, :nv], Z[:, nv]
        out = np.empty_like(Z)
        out[:, :nv] = self._grad(X) - lam[:, None] * self.target[None, :]
        out[:, nv] = X @ self.chart - 1
        return out

    def JF(self, Z):
        nv = self.nvars
        P = Z.shape[0]
        J = np.zeros((P, nv + 1, nv + 1), dtype=complex)
        J[:, :nv, :nv] = self._hess(Z[:, :nv]).reshape(P, nv, nv)
        J[:, :nv, nv] = -self.target[None, :]
        J[:, nv, :nv] = self.chart[None, :]
        return J


class _Homotopy:
    """The homotopy in homogeneous coordinates ``u = (x, lam, w)``.

    A random affine patch ``a . u = 1`` keeps paths bounded, so solutions
    running off to infinity in the ``(x, lam)`` chart end at ``w = 0``
    instead of blowing up.
    """

    def __init__(self, system: GradientSystem, gamma: complex, patch: np.ndarray):
        self.sys = system
        self.gamma = gamma
        self.patch = patch
        self.nv = system.nvars
        self.k = system.h.degree - 1

    def _split(self, U):
        nv = self.nv
        return U[:, :nv], U[:, nv], U[:, nv + 1]

    def F(self, U):
        X, lam, w = self._split(U)
        nv, k = self.nv, self.k
        out = np.empty((U.shape[0], nv + 1), dtype=complex)
        out[:, :nv] = self.sys._grad(X) - (lam * w ** (k - 1))[:, None] * self.sys.target[None, :]
        out[:, nv] = X @ self.sys.chart - w
        return out

    def JF(self, U):
        X, lam, w = self._split(U)
        nv, k = self.nv, self.k
        P = U.shape[0]
        J = np.zeros((P, nv + 1, nv + 2), dtype=complex)
        J[:, :nv, :nv] = self.sys._hess(X).reshape(P, nv, nv)
        J[:, :nv, nv] = -(w ** (k - 1))[:, None] * self.sys.target[None, :]
        if k > 1:
            J[:, :nv, nv + 1] = -((k - 1) * lam * w ** (k - 2))[:, None] * self.sys.target[None, :]
        J[:, nv, :nv] = self.sys.chart[None, :]
        J[:, nv, nv + 1] = -1
        return J

    def G(self, U):
        X, lam, w = self._split(U)
        out = np.empty((U.shape[0], self.nv + 1), dtype=complex)
        out[:, : self.nv] = X ** self.k - (w ** self.k)[:, None]
        out[:, self.nv] = lam - w
        return out

    def JG(self, U):
        X, lam, w = self._split(U)
        nv, k = self.nv, self.k
        P = U.shape[0]
        J = np.zeros((P, nv + 1, nv + 2), dtype=complex)
        idx = np.arange(nv)
        J[:, idx, idx] = k * X ** (k - 1)
        J[:, :nv, nv + 1] = -(k * w ** (k - 1))[:, None]
        J[:, nv, nv] = 1
        J[:, nv, nv + 1] = -1
        return J

    def H(self, U, t):
        out = np.empty_like(U)
        out[:, :-1] = ((1 - t) * self.gamma)[:, None] * self.G(U) + t[:, None] * self.F(U)
        out[:, -1] = U @ self.patch - 1
        return out

    def Hu(self, U, t):
        P, m = U.shape
        J = np.empty((P, m, m), dtype=complex)
        J[:, :-1] = ((1 - t) * self.gamma)[:, None, None] * self.JG(U) + t[:, None, None] * self.JF(U)
        J[:, -1] = self.patch[None, :]
        return J

    def Ht(self, U):
        out = np.zeros_like(U)
        out[:, :-1] = self.F(U) - self.gamma * self.G(U)
        return out

    def tangent(self, U, t):
        return -_solve(self.Hu(U, t), self.Ht(U))

    def start_solutions(self) -> np.ndarray:
        roots = np.exp(2j * np.pi * np.arange(self.k) / self.k)
        pts = np.array([list(p) + [1.0, 1.0] for p in itertools.product(roots, repeat=self.nv)], dtype=complex)
        return pts / (pts @ self.patch)[:, None]


def _solve(J, b):
    try:
        return np.linalg.solve(J, b[..., None])[..., 0]
    except np.linalg.LinAlgError:
        out = np.empty_like(b)
        for k in range(J.shape[0]):
            out[k] = np.linalg.lstsq(J[k], b[k], rcond=None)[0]
        return out


def _track(hom: _Homotopy, cfg: TrackerConfig):
    Z = hom.start_solutions()
    P = Z.shape[0]
    t = np.zeros(P)
    dt = np.full(P, cfg.initial_step)
    status = np.zeros(P, dtype=np.int8)
    streak = np.zeros(P, dtype=np.int64)
    steps = np.zeros(P, dtype=np.int64)
    for _ in range(cfg.max_iterations):
        act = np.flatnonzero(status == ACTIVE)
        if act.size == 0:
            break
        z0, t0 = Z[act], t[act]
        h = np.minimum(dt[act], 1 - t0)
        # RK4 predictor
        with np.errstate(all="ignore"):
            k1 = hom.tangent(z0, t0)
            k2 = hom.tangent(z0 + 0.5 * h[:, None] * k1, t0 + 0.5 * h)
            k3 = hom.tangent(z0 + 0.5 * h[:, None] * k2, t0 + 0.5 * h)
            k4 = hom.tangent(z0 + h[:, None] * k3, t0 + h)
            z1 = z0 + (h / 6)[:, None] * (k1 + 2 * k2 + 2 * k3 + k4)
            t1 = t0 + h
            scale = 1 + np.linalg.norm(z1, axis=1)
            ok = np.zeros(act.size, dtype=bool)
            sane = np.ones(act.size, dtype=bool)
            prev = None
            for it in range(cfg.corrector_iters):
                delta = _solve(hom.Hu(z1, t1), hom.H(z1, t1))
                z1 = z1 - delta
                size = np.linalg.norm(delta, axis=1)
                if it == 0:
                    # a large first correction means the predictor left the path
                    sane &= size <= cfg.first_correction * scale
                elif prev is not None:
                    sane &= (size <= cfg.contraction * prev) | (size <= cfg.corrector_tol * scale)
                prev = size
                ok = sane & (size <= cfg.corrector_tol * scale)
                if ok.all() or not sane.any():
                    break
        ok &= np.isfinite(z1).all(axis=1)
        good, bad = act[ok], act[~ok]
        Z[good] = z1[ok]
        t[good] = np.where(1 - t1[ok] <= 1e-15, 1.0, t1[ok])
        steps[good] += 1
        streak[good] += 1
        grow = good[streak[good] >= 3]
        dt[grow] = np.minimum(dt[grow] * 2, cfg.max_step)
        streak[grow] = 0
        dt[bad] *= 0.5
        streak[bad] = 0
        status[good[t[good] >= 1.0]] = FINISHED
        status[good[_affine_norm(Z[good]) > cfg.divergence]] = DIVERGED
        status[bad[dt[bad] < cfg.min_step]] = FAILED
    status[status == ACTIVE] = FAILED
    return Z, t, status, steps


def _affine_norm(U: np.ndarray) -> np.ndarray:
    with np.errstate(all="ignore"):
        return np.linalg.norm(U[:, :-1], axis=1) / np.abs(U[:, -1])


def _sharpen(system: GradientSystem, Z: np.ndarray, iters: int):
    with np.errstate(all="ignore"):
        for _ in range(iters):
            Z = Z - _solve(system.JF(Z), system.F(Z))
        res = np.linalg.norm(system.F(Z), axis=1)
        cond = np.linalg.cond(system.JF(Z))
    return Z, res, cond


def _relative_h(system: GradientSystem, X: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(X, axis=1)
    with np.errstate(all="ignore"):
        return np.abs(system.h_values(X)) / norms ** system.h.degree


def _projective_distance(a: np.ndarray, b: np.ndarray) -> float:
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    return float(np.sqrt(max(0.0, 1 - abs(np.vdot(a, b)) ** 2)))


def _cluster(points: list[np.ndarray], tol: float) -> tuple[int, list[str], int]:
    """Greedy projective clustering after a lexicographic sort."""
    order = sorted(
        range(len(points)),
        key=lambda k: tuple(np.round(points[k] / points[k][np.argmax(np.abs(points[k]))], 6).view(float)),
    )
    reps: list[np.ndarray] = []
    flags = []
    merged = 0
    for k in order:
        p = points[k]
        dists = [_projective_distance(p, q) for q in reps]
        close = min(dists) if dists else np.inf
        if close < tol:
            merged += 1
        else:
            if close < 10 * tol:
                flags.append(f"cluster_ambiguity:{close:.2e}")
            reps.append(p)
    return len(reps), flags, merged


def _attempt(h: HomogeneousPoly, rng: np.random.Generator, cfg: TrackerConfig, verbose: bool):
    nv = h.nvars
    c = rng.normal(size=nv) + 1j * rng.normal(size=nv)
    r = rng.normal(size=nv) + 1j * rng.normal(size=nv)
    patch = rng.normal(size=nv + 2) + 1j * rng.normal(size=nv + 2)
    gamma = np.exp(2j * np.pi * rng.random())
    system = GradientSystem(h, c, r)
    hom = _Homotopy(system, gamma, patch)
    U, t, status, steps = _track(hom, cfg)
    P = U.shape[0]
    aff = _affine_norm(U)
    rel_h = _relative_h(system, U[:, :nv])

    near_end = t > 1 - cfg.stall_window
    stalled = (status == FAILED) & near_end & (aff <= cfg.stall_divergence)
    finite = np.flatnonzero(((status == FINISHED) & (aff <= cfg.divergence)) | stalled)
    with np.errstate(all="ignore"):
        Z = U[:, :-1] / U[:, -1:]
    residuals = np.full(P, np.nan)
    cond = np.full(P, np.inf)
    if finite.size:
        Z[finite], residuals[finite], cond[finite] = _sharpen(system, Z[finite], cfg.sharpen_iters)
        slow = np.flatnonzero(stalled)
        if slow.size:
            # stalled paths start further from their root
            Z[slow], residuals[slow], cond[slow] = _sharpen(system, Z[slow], 4 * cfg.sharpen_iters)
        rel_h[finite] = _relative_h(system, Z[finite, :nv])
    # a stalled path whose end point sharpens to a regular root is finished
    revived = stalled & (cond < cfg.regular_cond) & (residuals < cfg.residual_tol)
    status = np.where(revived, FINISHED, status)

    kinds = ["failed"] * P
    accepted: list[np.ndarray] = []
    flags: list[str] = []
    for k in range(P):
        if status[k] == DIVERGED or (status[k] == FINISHED and aff[k] > cfg.divergence):
            kinds[k] = "diverged"
        elif status[k] == FINISHED:
            if 1e-2 < rel_h[k] / cfg.membership_tol < 1e2 and "membership_ambiguity" not in flags:
                flags.append("membership_ambiguity")
            if rel_h[k] < cfg.membership_tol:
                kinds[k] = "on_V_h"
            elif residuals[k] < cfg.residual_tol * max(1.0, float(np.linalg.norm(Z[k]))) ** max(1, h.degree - 1):
                kinds[k] = "solution"
                accepted.append(Z[k, :nv].copy())
        elif near_end[k] and aff[k] > cfg.stall_divergence:
            kinds[k] = "diverged"  # singular endpoint at infinity
        elif near_end[k] and rel_h[k] < cfg.membership_tol:
            kinds[k] = "on_V_h"
            if "singular_endpoint_on_V_h" not in flags:
                flags.append("singular_endpoint_on_V_h")
    diverged = kinds.count("diverged")
    failed = kinds.count("failed")
    on_vh = kinds.count("on_V_h")
    converged = P - diverged - failed
    distinct, cflags, merged = _cluster(accepted, cfg.cluster_tol)
    flags.extend(cflags)
    if merged:
        flags.append(f"duplicate_endpoint:{merged}")
    if failed:
        flags.append(f"failed_paths:{failed}")
    sol_res = [residuals[k] for k in range(P) if kinds[k] == "solution"]
    paths = None
    if verbose:
        paths = [
            {
                "kind": kinds[k],
                "t": float(t[k]),
                "steps": int(steps[k]),
                "affine_norm": float(aff[k]),
                "residual": None if np.isnan(residuals[k]) else float(residuals[k]),
                "relative_h": float(rel_h[k]),
                "condition": None if not np.isfinite(cond[k]) else float(cond[k]),
            }
            for k in range(P)
        ]
    return HomotopyResult(
        raw_paths=P,
        converged=converged,
        discarded_diverged=diverged,
        failed=failed,
        discarded_on_V_h=on_vh,
        distinct_solutions=distinct,
        max_residual=float(max(sol_res)) if sol_res else 0.0,
        flags=flags,
        paths=paths,
    )


def grad_fiber_count(
    h: HomogeneousPoly,
    seed: int = 0,
    cfg: TrackerConfig | None = None,
    verbose: bool = False,
) -> HomotopyResult:
    """Count the points of a generic fiber of ``grad(h)`` inside D(h).

    Inconclusive attempts (lost paths, near-coincident endpoints) are
    retried with fresh random data and halved maximum step; when the budget
    is exhausted the last result is returned with ``distinct_solutions``
    set to ``None``.
    """
    cfg = cfg or TrackerConfig()
    if h.degree < 2:
        raise GradientOracleError("gradient oracle needs degree >= 2")
    if h.nvars > MAX_NVARS:
        raise GradientOracleError(f"gradient oracle limited to {MAX_NVARS} variables")
    if not is_reduced(h, seed=seed):
        raise GradientOracleError("polynomial is not reduced")
    rng = np.random.default_rng(seed)
    start = time.perf_counter()
    result = None
    for attempt in range(1, cfg.retries + 1):
        step_cfg = TrackerConfig(**{**asdict(cfg), "max_step": cfg.max_step / 2 ** (attempt - 1)})
        result = _attempt(h, rng, step_cfg, verbose)
        result.attempts = attempt
        if not result.ambiguous:
            break
        log.info("attempt %d inconclusive: %s", attempt, result.flags)
    result.seed = seed
    result.seconds = time.perf_counter() - start
    if result.ambiguous:
        result.distinct_solutions = None
    return result


def grad_fiber_consensus(
    h: HomogeneousPoly,
    seeds: Sequence[int] = (0, 1, 2),
    cfg: TrackerConfig | None = None,
) -> tuple[int | None, list[HomotopyResult]]:
    """Run several seeds; the count is returned only when every run agrees."""
    results = [grad_fiber_count(h, s, cfg) for s in seeds]
    counts = {r.distinct_solutions for r in results}
    if len(counts) == 1 and None not in counts:
        return counts.pop(), results
    return None, results


def grad_degree_numeric(h: HomogeneousPoly, seed: int = 0, cfg: TrackerConfig | None = None) -> int:
    result = grad_fiber_count(h, seed, cfg)
    if result.distinct_solutions is None:
        raise Inconclusive(f"homotopy run inconclusive: {result.flags}", result)
    return result.distinct_solutions


def polar_invariant_numeric(h: HomogeneousPoly, seed: int = 0, cfg: TrackerConfig | None = None) -> int:
    return h.degree * grad_degree_numeric(h, seed, cfg)
