"""Zipper IFS assembly: affine maps, trigonometric basis, rational maps.

Each subinterval j carries

    L_j(t)    = a_j t + b_j
    F_j(t, f) = lambda_j f + M_j(t),   M_j(t) = p_j(theta) / q_j(theta),
    theta     = (pi / 2) (t - t_1) / (t_n - t_1)

with p_j, q_j cubic combinations of the basis below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .data_model import (
    AffineMap,
    Dataset,
    DerivativeSet,
    ZipperConfig,
    validate_config,
)
from .errors import IndexOutOfRange, LengthMismatch, OutOfDomain, ThetaOutOfRange

HALF_PI = 0.5 * math.pi
# absorbs rounding when t sits exactly on t_n
THETA_SLACK = 1e-12


class TrigBasis(NamedTuple):
    B0: float
    B1: float
    B2: float
    B3: float


def basis(theta):
    """Vectorised ``(B0, B1, B2, B3)`` without range checks."""
    s = np.sin(theta)
    c = np.cos(theta)
    return (1 - s) ** 3, s * (1 - s) ** 2, c * (1 - c) ** 2, (1 - c) ** 3


def basis_derivative(theta):
    """d/dtheta of each basis function."""
    s = np.sin(theta)
    c = np.cos(theta)
    return (
        -3 * c * (1 - s) ** 2,
        c * (1 - s) * (1 - 3 * s),
        s * (1 - c) * (3 * c - 1),
        3 * s * (1 - c) ** 2,
    )


def _check_theta(theta: float) -> float:
    if theta < -THETA_SLACK or theta > HALF_PI + THETA_SLACK:
        raise ThetaOutOfRange(f"theta = {theta!r} outside [0, pi/2]")
    return min(max(theta, 0.0), HALF_PI)


def trig_basis(theta: float) -> TrigBasis:
    theta = _check_theta(float(theta))
    return TrigBasis(*(float(v) for v in basis(theta)))


def affine_map(ds: Dataset, j: int, eps: int) -> AffineMap:
    """Map ``[t_1, t_n]`` onto subinterval ``j`` (0-based).

    With ``eps = 0`` the map keeps orientation (``L(t_1) = t_j``); with
    ``eps = 1`` it reverses it (``L(t_1) = t_{j+1}``) and the slope is
    negative.
    """
    if not 0 <= j < ds.n - 1:
        raise IndexOutOfRange(f"interval index {j} outside 0..{ds.n - 2}")
    t = ds.knots
    start = t[j + eps]
    end = t[j + 1 - eps]
    l = ds.length
    a = (end - start) / l
    b = (ds.tn * start - ds.t1 * end) / l
    return AffineMap(float(a), float(b), ds.t1, ds.tn)


@dataclass(frozen=True)
class RationalCoeffs:
    """Numerator (U, V, W, X) and denominator (alpha..delta) weights."""

    U: float
    V: float
    W: float
    X: float
    alpha: float
    beta: float
    gamma: float
    delta: float

    def numerator(self, theta):
        B0, B1, B2, B3 = basis(theta)
        return B0 * self.U + B1 * self.V + B2 * self.W + B3 * self.X

    def denominator(self, theta):
        B0, B1, B2, B3 = basis(theta)
        return B0 * self.alpha + B1 * self.beta + B2 * self.gamma + B3 * self.delta

    @property
    def numerator_coeffs(self):
        return (self.U, self.V, self.W, self.X)


def rational_coeffs(ds: Dataset, d: DerivativeSet, cfg: ZipperConfig, j: int) -> RationalCoeffs:
    """Coefficients of M_j forced by the value and derivative conditions.

    With ``lo = j + eps_j`` and ``hi = j + 1 - eps_j`` (the knots that
    ``L_j(t_1)`` and ``L_j(t_n)`` land on)::

        U = alpha (f_lo - lam f_1)
        V = beta  (f_lo - lam f_1) + (2 l / pi) alpha (a d_lo - lam d_1)
        W = gamma (f_hi - lam f_n) - (2 l / pi) delta (a d_hi - lam d_n)
        X = delta (f_hi - lam f_n)

    ``a`` is the signed slope of L_j. The derivative terms are what make
    ``phi'`` match ``d`` at both ends of the interval.
    """
    eps = cfg.signature[j]
    L = affine_map(ds, j, eps)
    lo, hi = j + eps, j + 1 - eps
    f, dd = ds.values, d.d
    lam = float(cfg.lambdas[j])
    al, be, ga, de = (float(cfg.alphas[j]), float(cfg.betas[j]),
                      float(cfg.gammas[j]), float(cfg.deltas[j]))
    k = 2.0 * ds.length / math.pi
    f_lo = f[lo] - lam * f[0]
    f_hi = f[hi] - lam * f[-1]
    d_lo = L.a * dd[lo] - lam * dd[0]
    d_hi = L.a * dd[hi] - lam * dd[-1]
    return RationalCoeffs(
        U=float(al * f_lo),
        V=float(be * f_lo + k * al * d_lo),
        W=float(ga * f_hi - k * de * d_hi),
        X=float(de * f_hi),
        alpha=al,
        beta=be,
        gamma=ga,
        delta=de,
    )


def _theta(ds: Dataset, t):
    return HALF_PI * (np.asarray(t, dtype=float) - ds.t1) / ds.length


def eval_M(coeffs: RationalCoeffs, ds: Dataset, t):
    """``M(t) = p(theta) / q(theta)``."""
    th = _theta(ds, t)
    return coeffs.numerator(th) / coeffs.denominator(th)


def eval_dM(coeffs: RationalCoeffs, ds: Dataset, t):
    """Analytic ``dM/dt`` by the quotient rule."""
    th = _theta(ds, t)
    B = basis(th)
    dB = basis_derivative(th)
    num_c = coeffs.numerator_coeffs
    den_c = (coeffs.alpha, coeffs.beta, coeffs.gamma, coeffs.delta)
    p = sum(b * c for b, c in zip(B, num_c))
    q = sum(b * c for b, c in zip(B, den_c))
    dp = sum(b * c for b, c in zip(dB, num_c))
    dq = sum(b * c for b, c in zip(dB, den_c))
    return (dp * q - p * dq) / q**2 * (HALF_PI / ds.length)


class ZipperIfs:
    """The assembled zipper IFS ``{(L_j, F_j)}``.

    Per-interval parameters are also stored as arrays so the evaluator can
    work on whole grids at once.
    """

    def __init__(self, ds: Dataset, d: DerivativeSet, cfg: ZipperConfig, maps, coeffs):
        self.dataset = ds
        self.derivatives = d
        self.config = cfg
        self.maps = tuple(maps)
        self.coeffs = tuple(coeffs)
        self.a = np.array([L.a for L in self.maps])
        self.b = np.array([L.b for L in self.maps])
        self.lambdas = np.array(cfg.lambdas)
        self._num = np.array([c.numerator_coeffs for c in self.coeffs]).T
        self._den = np.array(
            [(c.alpha, c.beta, c.gamma, c.delta) for c in self.coeffs]
        ).T
        for arr in (self.a, self.b, self.lambdas, self._num, self._den):
            arr.flags.writeable = False

    @property
    def m(self) -> int:
        return len(self.maps)

    @property
    def lambda_inf(self) -> float:
        return self.config.lambda_inf

    @property
    def is_classical(self) -> bool:
        return self.config.is_classical

    def M(self, j, t):
        """``M_j(t)`` for index arrays ``j`` and points ``t`` (broadcast)."""
        j = np.asarray(j)
        B = basis(_theta(self.dataset, t))
        p = sum(Bk * self._num[k][j] for k, Bk in enumerate(B))
        q = sum(Bk * self._den[k][j] for k, Bk in enumerate(B))
        return p / q

    def F(self, j: int, t, f):
        return self.lambdas[j] * f + self.M(j, t)

    def F1(self, j: int, t, dv):
        """Derivative-level map ``(lambda_j dv + M_j'(t)) / a_j``."""
        return (self.lambdas[j] * dv + eval_dM(self.coeffs[j], self.dataset, t)) / self.a[j]

    def preimage(self, s):
        """Interval index and ``L_j^{-1}(s)`` for points ``s`` in ``[t_1, t_n]``.

        Preimages are clamped into ``[t_1, t_n]``; they only stray by
        rounding.
        """
        ds = self.dataset
        s = np.asarray(s, dtype=float)
        slack = THETA_SLACK * ds.length
        if np.any(s < ds.t1 - slack) or np.any(s > ds.tn + slack):
            raise OutOfDomain(f"points outside [{ds.t1}, {ds.tn}]")
        j = ds.interval_of(s)
        t = (s - self.b[j]) / self.a[j]
        return j, np.clip(t, ds.t1, ds.tn)


def build_ifs(ds: Dataset, d: DerivativeSet, cfg: ZipperConfig) -> ZipperIfs:
    validate_config(ds, cfg)
    if len(d) != ds.n:
        raise LengthMismatch("derivatives", ds.n, len(d))
    maps = [affine_map(ds, j, cfg.signature[j]) for j in range(cfg.m)]
    coeffs = [rational_coeffs(ds, d, cfg, j) for j in range(cfg.m)]
    return ZipperIfs(ds, d, cfg, maps, coeffs)
