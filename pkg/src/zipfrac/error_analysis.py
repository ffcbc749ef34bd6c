"""A-priori sup-norm error bound and measured gaps.

The bound on ``||phi_eps - psi||_inf`` has three parts:

    zipper  = ||eps||_inf / (1 - |lam|) * (C Phi + 4 h eta / pi)
    spline  = 0.5 * ||psi'''||_inf * h**3 * c
    fractal = |lam| / (1 - |lam|) * (E(h) + E*(h))

    E(h)  = ||psi||_inf + 4 h E1 / pi
    E*(h) = F + 4 h E2 / pi

with ``Phi = max |f_j|``, ``eta = max |d_j|``, ``E1 = max |d_j|`` over
j < n, ``E2 = max(|d_1|, |d_n|)`` and ``F = max(|f_1|, |f_n|)``. ``c`` comes
from the error analysis of the underlying classical spline and is not
computed here.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .data_model import Dataset, DerivativeSet, SampledFunction, ZipperConfig, validate_config
from .errors import GridMismatch, ZipfracError
from .ifs import HALF_PI, rational_coeffs

XI_GRID = 10_000


@dataclass(frozen=True)
class ErrorBoundInputs:
    """Quantities the data alone cannot supply.

    psi_sup, psi3_sup:
        ``||psi||_inf`` and ``||psi'''||_inf`` of the data-generating
        function, if known.
    c:
        Constant of the classical spline error estimate. When omitted, 1 is
        used and the report flags it as illustrative only.
    C:
        Numerator-ratio constant ``q_j(theta) / xi``, which never exceeds
        1; 1 keeps the bound a bound.
    """

    psi_sup: float | None = None
    psi3_sup: float | None = None
    c: float | None = None
    C: float = 1.0

    def __post_init__(self):
        for name in ("psi_sup", "psi3_sup"):
            v = getattr(self, name)
            if v is not None and not (math.isfinite(v) and v >= 0):
                raise ZipfracError(f"{name} must be finite and >= 0, got {v}")
        if self.c is not None and not (math.isfinite(self.c) and self.c > 0):
            raise ZipfracError(f"c must be > 0, got {self.c}")
        if not (0 < self.C <= 1):
            raise ZipfracError(f"C must lie in (0, 1], got {self.C}")


@dataclass(frozen=True)
class ErrorBoundReport:
    zipper_term: float
    spline_term: float | None
    fractal_term: float
    total: float | None
    Phi: float
    eta: float
    h: float
    l: float
    xi: float
    E_h: float
    E_star_h: float
    E1: float
    E2: float
    F: float
    eps_inf: int
    lambda_inf: float
    notes: tuple = field(default=())

    def as_dict(self) -> dict:
        out = asdict(self)
        out["notes"] = list(self.notes)
        return out


def max_denominator(ds: Dataset, d: DerivativeSet, cfg: ZipperConfig,
                    points: int = XI_GRID) -> float:
    """``xi``: the largest ``|q_j(theta)|`` over intervals and a theta grid."""
    theta = np.linspace(0.0, HALF_PI, points)
    return max(
        float(np.max(np.abs(rational_coeffs(ds, d, cfg, j).denominator(theta))))
        for j in range(cfg.m)
    )


def bound_report(ds: Dataset, d: DerivativeSet, cfg: ZipperConfig,
                 inputs: ErrorBoundInputs | None = None) -> ErrorBoundReport:
    inputs = inputs or ErrorBoundInputs()
    validate_config(ds, cfg)
    f = np.abs(ds.values)
    dd = np.abs(d.d)
    h = ds.h
    lam = cfg.lambda_inf
    eps_inf = cfg.signature.norm_inf
    notes = []

    Phi = float(f.max())
    eta = float(dd.max())
    E1 = float(dd[:-1].max())
    E2 = float(max(dd[0], dd[-1]))
    F = float(max(f[0], f[-1]))

    if inputs.psi_sup is None:
        psi_sup = Phi
        notes.append("psi_sup not given: estimated by max |f_i| (may underestimate)")
    else:
        psi_sup = inputs.psi_sup

    E_h = psi_sup + 4.0 * h / math.pi * E1
    E_star = F + 4.0 * h / math.pi * E2

    zipper = eps_inf / (1.0 - lam) * (inputs.C * Phi + 4.0 * h * eta / math.pi) if eps_inf else 0.0
    fractal = lam / (1.0 - lam) * (E_h + E_star) if lam else 0.0
    if inputs.psi3_sup is None:
        spline = None
        total = None
        notes.append("spline term requires psi stats (psi3_sup)")
    else:
        c = 1.0 if inputs.c is None else inputs.c
        spline = 0.5 * inputs.psi3_sup * h**3 * c
        total = zipper + spline + fractal
        if inputs.c is None:
            notes.append("c defaulted to 1: illustrative only")

    return ErrorBoundReport(
        zipper_term=float(zipper),
        spline_term=spline,
        fractal_term=float(fractal),
        total=total,
        Phi=Phi,
        eta=eta,
        h=h,
        l=ds.length,
        xi=max_denominator(ds, d, cfg),
        E_h=E_h,
        E_star_h=E_star,
        E1=E1,
        E2=E2,
        F=F,
        eps_inf=eps_inf,
        lambda_inf=lam,
        notes=tuple(notes),
    )


def measured_gap(fa: SampledFunction, fb: SampledFunction) -> float:
    """``max_i |fa_i - fb_i|`` over a shared grid."""
    if not fa.same_grid(fb):
        raise GridMismatch("sampled functions live on different grids")
    return float(np.max(np.abs(fa.values - fb.values)))
