"""Iterative eigenvalue engine for linear second-order ODEs.

Works on equations brought to the canonical form

    y'' = lambda0(x) y' + s0(x) y

(terms moved to the right-hand side; an equation written as
``y'' + P y' + Q y = 0`` therefore has lambda0 = -P, s0 = -Q).  The
coefficient sequence

    lambda_k = lambda_{k-1}' + s_{k-1} + lambda0 * lambda_{k-1}
    s_k      = s_{k-1}'      + s0 * lambda_{k-1}

terminates for exactly solvable problems, and eigenvalues are located as
roots of the termination indicator

    delta_k(x0; E) = lambda_k s_{k-1} - lambda_{k-1} s_k

evaluated at the expansion point.  Coefficient functions are carried as
truncated Taylor jets; each iteration differentiates once, so a depth-k
run needs jets of order at least k, and factories in this package
default to 2k + 8 to keep ample headroom.

Roots of delta_k that correspond to true terminating solutions stay put
as the depth changes; spurious roots drift.  ``aim_eigen_scan``
therefore re-runs the scan one level shallower and reports a per-root
stability gap, flagging drifting roots as not converged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import DomainError, JetMismatchError
from .jets import SeriesJet, jet_add, jet_differentiate, jet_mul
from .rootfind import bisect, sign_change_brackets

__all__ = [
    "AimProblem",
    "AimRoot",
    "AimScanReport",
    "aim_delta",
    "aim_eigen_scan",
    "aim_iterate",
]

JetBuilder = Callable[[float], SeriesJet]


@dataclass(frozen=True)
class AimProblem:
    """Jet builders for the canonical coefficients.

    ``lambda0`` and ``s0`` map the spectral parameter E to coefficient
    jets of order max_order expanded about x0.  E is whatever quantity
    the quantization condition is scanned over; it usually enters only
    s0.
    """

    lambda0: JetBuilder
    s0: JetBuilder
    x0: float
    max_order: int

    def __post_init__(self):
        if self.max_order < 1:
            raise DomainError(f"max_order must be >= 1, got {self.max_order}")

    def coefficient_jets(self, e: float) -> tuple[SeriesJet, SeriesJet]:
        lam0 = self.lambda0(e)
        s0 = self.s0(e)
        for jet in (lam0, s0):
            if jet.x0 != self.x0:
                raise JetMismatchError(
                    f"builder produced jet at x0={jet.x0!r}, problem has {self.x0!r}"
                )
            if jet.order != self.max_order:
                raise JetMismatchError(
                    f"builder produced order {jet.order}, problem has {self.max_order}"
                )
        return lam0, s0


@dataclass(frozen=True)
class AimRoot:
    value: float
    residual: float
    stability_gap: float
    converged: bool


@dataclass(frozen=True)
class AimScanReport:
    k_used: int
    bracket: tuple[float, float]
    grid: int
    roots: tuple[AimRoot, ...]
    shallow_roots: tuple[float, ...]
    warnings: tuple[str, ...] = field(default=())

    def converged_roots(self) -> list[float]:
        return [r.value for r in self.roots if r.converged]


def _recurrence(problem: AimProblem, e: float, k: int):
    """((lambda_{k-1}, s_{k-1}), (lambda_k, s_k)) after k iterations."""
    lam0, s0 = problem.coefficient_jets(e)
    lam_prev, s_prev = lam0, s0
    lam_cur = jet_add(jet_add(jet_differentiate(lam_prev), s_prev), jet_mul(lam0, lam_prev))
    s_cur = jet_add(jet_differentiate(s_prev), jet_mul(s0, lam_prev))
    for _ in range(k - 1):
        lam_prev, s_prev = lam_cur, s_cur
        lam_cur = jet_add(jet_add(jet_differentiate(lam_prev), s_prev), jet_mul(lam0, lam_prev))
        s_cur = jet_add(jet_differentiate(s_prev), jet_mul(s0, lam_prev))
    return (lam_prev, s_prev), (lam_cur, s_cur)


def _check_depth(problem: AimProblem, k: int) -> None:
    if k < 1:
        raise DomainError(f"iteration depth must be >= 1, got {k}")
    if k > problem.max_order:
        raise DomainError(
            f"depth {k} exceeds the problem's jet order {problem.max_order}; "
            "each iteration consumes one Taylor order"
        )


def aim_iterate(problem: AimProblem, e: float, k: int):
    """Run k recurrence steps; return (lambda_k, s_k, delta_k at x0)."""
    _check_depth(problem, k)
    (lam_prev, s_prev), (lam_cur, s_cur) = _recurrence(problem, e, k)
    delta = lam_cur.value * s_prev.value - lam_prev.value * s_cur.value
    return lam_cur, s_cur, delta


def aim_delta(problem: AimProblem, e: float, k: int) -> float:
    """Termination indicator delta_k evaluated at the expansion point."""
    _check_depth(problem, k)
    (lam_prev, s_prev), (lam_cur, s_cur) = _recurrence(problem, e, k)
    return lam_cur.value * s_prev.value - lam_prev.value * s_cur.value


def _scan_roots(problem, lo, hi, k, grid, xtol):
    f = lambda e: aim_delta(problem, e, k)
    roots = []
    crowded = []
    cells = sign_change_brackets(f, lo, hi, grid)
    h = (hi - lo) / grid
    prev_cell_index = None
    for a, b in cells:
        cell_index = int((a - lo) / h) if h > 0 else 0
        if prev_cell_index is not None and cell_index == prev_cell_index + 1:
            crowded.append(cell_index)
        prev_cell_index = cell_index
        r = a if a == b else bisect(f, a, b, xtol=xtol)
        if not roots or abs(r - roots[-1]) > 4.0 * xtol:
            roots.append(r)
    return roots, crowded


def aim_eigen_scan(
    problem: AimProblem,
    bracket: tuple[float, float],
    k: int,
    *,
    n_roots: Optional[int] = None,
    tol: float = 1e-12,
    grid: int = 512,
    stability_tol: float = 1e-8,
) -> AimScanReport:
    """Locate roots of delta_k over a bracket and grade their stability.

    Roots are found by a uniform sign-change scan refined with bisection,
    then compared against the roots of delta_(k-1): the stability gap is
    the distance to the nearest shallower root, and a root is marked
    converged when that gap is small relative to the root's magnitude.
    Exact terminating eigenvalues sit at the same position at both
    depths; spurious roots do not.  A bracket with no sign change yields
    an empty report rather than an error; adjacent sign-changing grid
    cells produce a too-coarse warning.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if not hi > lo:
        raise DomainError(f"empty scan bracket ({lo!r}, {hi!r})")
    if k < 2:
        raise DomainError("stability grading needs depth k >= 2")
    _check_depth(problem, k)
    scale = max(abs(lo), abs(hi), 1.0)
    xtol = tol * scale
    deep, crowded = _scan_roots(problem, lo, hi, k, grid, xtol)
    shallow, _ = _scan_roots(problem, lo, hi, k - 1, grid, xtol)
    if n_roots is not None:
        deep = deep[:n_roots]
    graded = []
    for r in deep:
        gap = min((abs(r - s) for s in shallow), default=float("inf"))
        converged = gap <= stability_tol * max(1.0, abs(r))
        graded.append(
            AimRoot(
                value=r,
                residual=aim_delta(problem, r, k),
                stability_gap=gap,
                converged=converged,
            )
        )
    warnings = tuple(
        f"adjacent sign changes in scan cells {i - 1} and {i}; grid may be too coarse"
        for i in crowded
    )
    return AimScanReport(
        k_used=k,
        bracket=(lo, hi),
        grid=grid,
        roots=tuple(graded),
        shallow_roots=tuple(shallow),
        warnings=warnings,
    )
