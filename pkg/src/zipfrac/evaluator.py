"""Fixed-point evaluation of the zipper fractal interpolant.

The interpolant ``phi`` solves ``phi(L_j(t)) = lambda_j phi(t) + M_j(t)``.
Equivalently it is the fixed point of

    (T g)(s) = lambda_j g(L_j^{-1}(s)) + M_j(L_j^{-1}(s)),   s in I_j,

which is a contraction with factor ``max |lambda_j|`` in the sup norm. We
iterate ``T`` on a uniform grid, reading ``g`` between grid points by
piecewise-linear interpolation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .data_model import SampledFunction
from .errors import GridMismatch, NotClassical, NotConverged, OutOfDomain, ZipfracError
from .ifs import THETA_SLACK, ZipperIfs

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvalSettings:
    grid_size: int = 1025
    tol: float = 1e-12
    max_iters: int = 200

    def __post_init__(self):
        if int(self.grid_size) != self.grid_size or self.grid_size < 33:
            raise ZipfracError(f"grid_size must be an integer >= 33, got {self.grid_size}")
        if not self.tol > 0:
            raise ZipfracError(f"tol must be > 0, got {self.tol}")
        if int(self.max_iters) != self.max_iters or self.max_iters < 1:
            raise ZipfracError(f"max_iters must be an integer >= 1, got {self.max_iters}")


@dataclass(frozen=True)
class EvalReport:
    result: SampledFunction
    iterations: int
    final_change: float
    initial_change: float
    contraction_observed: float
    converged: bool
    classical_path: bool
    changes: tuple = field(default=(), repr=False)

    def raise_if_not_converged(self) -> "EvalReport":
        if not self.converged:
            raise NotConverged(self.iterations, self.final_change)
        return self

    def as_dict(self) -> dict:
        return {
            "converged": self.converged,
            "iterations": self.iterations,
            "final_change": self.final_change,
            "initial_change": self.initial_change,
            "contraction_observed": self.contraction_observed,
            "classical_path": self.classical_path,
            "grid_size": self.result.size,
        }


def canonical_grid(ifs: ZipperIfs, size: int) -> np.ndarray:
    ds = ifs.dataset
    return np.linspace(ds.t1, ds.tn, size)


def _check_grid(ifs: ZipperIfs, g: SampledFunction) -> None:
    ds = ifs.dataset
    tol = THETA_SLACK * ds.length
    if abs(g.grid[0] - ds.t1) > tol or abs(g.grid[-1] - ds.tn) > tol:
        raise GridMismatch(
            f"grid spans [{g.grid[0]}, {g.grid[-1]}], expected [{ds.t1}, {ds.tn}]"
        )


def apply_operator(ifs: ZipperIfs, g: SampledFunction) -> SampledFunction:
    """One application of the operator on ``g``'s grid."""
    _check_grid(ifs, g)
    j, t = ifs.preimage(g.grid)
    values = ifs.lambdas[j] * g(t) + ifs.M(j, t)
    return SampledFunction(g.grid, values)


def fixed_point(ifs: ZipperIfs, settings: EvalSettings | None = None) -> EvalReport:
    """Iterate the operator from the piecewise-linear data interpolant.

    Stops once the sup-norm change between iterates is ``<= settings.tol``.
    A non-converged run still returns a report, with ``converged=False``.
    """
    settings = settings or EvalSettings()
    ds = ifs.dataset
    grid = canonical_grid(ifs, settings.grid_size)
    # preimages and M values are fixed across iterations
    j, t = ifs.preimage(grid)
    lam = ifs.lambdas[j]
    Mv = ifs.M(j, t)
    f1, fn = ds.values[0], ds.values[-1]

    g = np.interp(grid, ds.knots, ds.values)
    changes = []
    converged = False
    for _ in range(settings.max_iters):
        nxt = lam * np.interp(t, grid, g) + Mv
        # the operator acts on functions pinned to the end data values
        nxt[0], nxt[-1] = f1, fn
        change = float(np.max(np.abs(nxt - g)))
        changes.append(change)
        g = nxt
        if change <= settings.tol:
            converged = True
            break

    if not converged:
        log.warning("fixed point not converged: %d iterations, change %.3e",
                    len(changes), changes[-1])
    return EvalReport(
        result=SampledFunction(grid, g),
        iterations=len(changes),
        final_change=changes[-1],
        initial_change=changes[0],
        contraction_observed=_observed_rate(changes),
        converged=converged,
        classical_path=ifs.is_classical,
        changes=tuple(changes),
    )


def _observed_rate(changes) -> float:
    """Largest ratio of successive changes, ignoring the rounding floor."""
    floor = 1e-13 * max(changes[0], 1.0)
    ratios = [b / a for a, b in zip(changes, changes[1:]) if a > floor and b > floor]
    return max(ratios, default=0.0)


def evaluate(ifs: ZipperIfs, result: SampledFunction, t, depth: int = 1):
    """Evaluate ``phi`` at arbitrary points from a converged grid.

    Each level of ``depth`` applies the functional equation once more, so
    the grid's interpolation error is multiplied by ``|lambda|_inf`` per
    level. At knots the equation lands on the end points ``t_1``/``t_n`` and
    reproduces the data exactly up to rounding.
    """
    ds = ifs.dataset
    t = np.asarray(t, dtype=float)
    slack = THETA_SLACK * ds.length
    if np.any(t < ds.t1 - slack) or np.any(t > ds.tn + slack):
        raise OutOfDomain(f"evaluation points outside [{ds.t1}, {ds.tn}]")
    out = _refine(ifs, result, np.clip(t, ds.t1, ds.tn), depth)
    out = np.where(t == ds.t1, result.values[0], out)
    return np.where(t == ds.tn, result.values[-1], out)


def _refine(ifs, result, s, depth):
    if depth <= 0:
        return result(s)
    j, t = ifs.preimage(s)
    lam = ifs.lambdas[j]
    if ifs.is_classical:
        return ifs.M(j, t)
    return lam * _refine(ifs, result, t, depth - 1) + ifs.M(j, t)


def eval_at(ifs: ZipperIfs, result: SampledFunction, t: float, depth: int = 1) -> float:
    return float(evaluate(ifs, result, float(t), depth))


def classical_eval(ifs: ZipperIfs, t):
    """Closed-form ``M_j(L_j^{-1}(t))``; only defined when every lambda is 0."""
    if not ifs.is_classical:
        raise NotClassical("classical evaluation needs lambda_j = 0 for all j")
    j, s = ifs.preimage(t)
    return ifs.M(j, s)
