"""Sufficient parameter conditions for a positive interpolant.

For positive data, ``phi > 0`` follows when each ``M_j`` is positive and
``0 <= lambda_j``: the operator then maps non-negative functions to positive
ones. ``M_j > 0`` holds when all four numerator weights U, V, W, X are
positive (the basis functions are non-negative and the denominator is
positive). The bounds below are those weights' sign conditions solved for
lambda_j, beta_j and gamma_j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .data_model import Dataset, DerivativeSet, Signature
from .errors import LambdaOutOfBounds, NonPositiveData
from .evaluator import EvalSettings, evaluate, fixed_point
from .ifs import HALF_PI, ZipperIfs, affine_map

NUMERATOR_GRID = 2001


@dataclass(frozen=True)
class PositivityBounds:
    lambda_max: np.ndarray
    beta_min: np.ndarray | None = None
    gamma_min: np.ndarray | None = None

    def as_dict(self, digits: int = 4) -> dict:
        out = {
            "lambda_max": [float(x) for x in self.lambda_max],
            "lambda_max_display": [f"{x:.{digits}f}" for x in self.lambda_max],
        }
        if self.beta_min is not None:
            out["beta_min"] = [float(x) for x in self.beta_min]
            out["gamma_min"] = [float(x) for x in self.gamma_min]
        return out


@dataclass(frozen=True)
class PositivityReport:
    """Certificate verdict, optionally with an empirical probe.

    ``reasons`` maps 0-based interval index to the conditions it fails.
    ``numerator_min`` is the per-interval minimum of ``p_j`` on a dense
    theta grid: a diagnostic, not part of the certificate.
    """

    certified: bool
    reasons: dict = field(default_factory=dict)
    numerator_min: tuple = ()
    empirical_min: float | None = None
    violating_intervals: tuple = ()
    probe_size: int = 0

    def as_dict(self, ds: Dataset | None = None) -> dict:
        def label(j):
            entry = {"interval": j + 1}
            if ds is not None:
                entry["range"] = [float(ds.knots[j]), float(ds.knots[j + 1])]
            return entry

        return {
            "certified": self.certified,
            "failed_conditions": [
                dict(label(j), conditions=list(r)) for j, r in sorted(self.reasons.items())
            ],
            "numerator_min": list(self.numerator_min),
            "empirical_min": self.empirical_min,
            "probe_size": self.probe_size,
            "violating_intervals": [label(j) for j in self.violating_intervals],
        }


def _require_positive(ds: Dataset) -> None:
    if np.any(ds.values <= 0):
        raise NonPositiveData("positivity bounds need every data value > 0")


def lambda_bounds(ds: Dataset, sig: Signature) -> np.ndarray:
    """Strict upper bounds ``min(|a_j|, f_lo / f_1, f_hi / f_n)`` on lambda_j.

    ``lo``/``hi`` are the knots that ``L_j`` sends ``t_1``/``t_n`` to. The
    ``|a_j|`` term is contractivity; the ratios keep U_j and X_j positive.
    """
    _require_positive(ds)
    f = ds.values
    abs_a = ds.steps / ds.length
    out = np.empty(ds.n - 1)
    for j in range(ds.n - 1):
        e = sig[j]
        out[j] = min(abs_a[j], f[j + e] / f[0], f[j + 1 - e] / f[-1])
    return out


def _starred(ds: Dataset, d: DerivativeSet, sig: Signature, lambdas):
    """Per-interval ``(f*_lo, f*_hi, d*_lo, d*_hi)`` arrays."""
    f, dd = ds.values, d.d
    m = ds.n - 1
    f_lo, f_hi, d_lo, d_hi = (np.empty(m) for _ in range(4))
    for j in range(m):
        e = sig[j]
        a = affine_map(ds, j, e).a
        lam = lambdas[j]
        lo, hi = j + e, j + 1 - e
        f_lo[j] = f[lo] - lam * f[0]
        f_hi[j] = f[hi] - lam * f[-1]
        d_lo[j] = a * dd[lo] - lam * dd[0]
        d_hi[j] = a * dd[hi] - lam * dd[-1]
    return f_lo, f_hi, d_lo, d_hi


def shape_bounds(ds: Dataset, d: DerivativeSet, sig: Signature, lambdas, alphas, deltas):
    """Strict lower bounds on beta_j and gamma_j given lambda, alpha, delta.

    ``beta_j > max(0, -2 l alpha_j d*_lo / (pi f*_lo))`` keeps V_j > 0 and
    ``gamma_j > max(0, 2 l delta_j d*_hi / (pi f*_hi))`` keeps W_j > 0.
    """
    lambdas = np.asarray(lambdas, dtype=float)
    alphas = np.broadcast_to(np.asarray(alphas, dtype=float), lambdas.shape)
    deltas = np.broadcast_to(np.asarray(deltas, dtype=float), lambdas.shape)
    lmax = lambda_bounds(ds, sig)
    for j, lam in enumerate(lambdas):
        if not 0 <= lam < lmax[j]:
            raise LambdaOutOfBounds(
                j, f"lambda = {lam:.6g} must lie in [0, {lmax[j]:.6g})"
            )
    f_lo, f_hi, d_lo, d_hi = _starred(ds, d, sig, lambdas)
    k = 2.0 * ds.length / math.pi
    beta_min = np.maximum(0.0, -k * alphas * d_lo / f_lo)
    gamma_min = np.maximum(0.0, k * deltas * d_hi / f_hi)
    return beta_min, gamma_min


def bounds(ds: Dataset, sig: Signature, d: DerivativeSet | None = None,
           lambdas=None, alphas=None, deltas=None) -> PositivityBounds:
    lmax = lambda_bounds(ds, sig)
    if d is None or lambdas is None:
        return PositivityBounds(lmax)
    bmin, gmin = shape_bounds(ds, d, sig, lambdas, alphas, deltas)
    return PositivityBounds(lmax, bmin, gmin)


def _numerator_min(ifs: ZipperIfs) -> tuple:
    theta = np.linspace(0.0, HALF_PI, NUMERATOR_GRID)
    return tuple(float(np.min(c.numerator(theta))) for c in ifs.coeffs)


def certify(ifs: ZipperIfs) -> PositivityReport:
    """Coefficient-sign certificate.

    Certified iff, for every interval, ``0 <= lambda_j < lambda_max_j`` and
    the computed U, V, W, X are all strictly positive. Non-positive data is
    never certified.
    """
    ds = ifs.dataset
    reasons: dict = {}
    if np.any(ds.values <= 0):
        return PositivityReport(False, {j: ("data not positive",) for j in range(ifs.m)},
                                _numerator_min(ifs))
    lmax = lambda_bounds(ds, ifs.config.signature)
    for j, c in enumerate(ifs.coeffs):
        lam = ifs.lambdas[j]
        failed = []
        if lam < 0:
            failed.append("lambda < 0")
        if not lam < lmax[j]:
            failed.append(f"lambda >= {lmax[j]:.6g}")
        for name, v in zip("UVWX", c.numerator_coeffs):
            if not v > 0:
                failed.append(f"{name} = {v:.6g} <= 0")
        if failed:
            reasons[j] = tuple(failed)
    return PositivityReport(not reasons, reasons, _numerator_min(ifs))


def empirical_check(ifs: ZipperIfs, settings: EvalSettings | None = None,
                    probe_size: int = 10001) -> PositivityReport:
    """Certificate plus the minimum of ``phi`` over a uniform probe grid.

    Negative probe samples are attributed to the knot interval containing
    them. Raises :class:`NotConverged` if the evaluation does not converge.
    """
    ds = ifs.dataset
    report = fixed_point(ifs, settings).raise_if_not_converged()
    probe = np.linspace(ds.t1, ds.tn, probe_size)
    values = evaluate(ifs, report.result, probe)
    negative = probe[values < 0]
    violating = tuple(sorted({int(j) for j in ds.interval_of(negative)}))
    cert = certify(ifs)
    return PositivityReport(
        certified=cert.certified,
        reasons=cert.reasons,
        numerator_min=cert.numerator_min,
        empirical_min=float(values.min()),
        violating_intervals=violating,
        probe_size=probe_size,
    )
