"""Core immutable types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .errors import (
    InvalidSignature,
    LengthMismatch,
    NonContractiveScaling,
    NonFiniteValue,
    NonIncreasingKnots,
    NonPositiveDenominatorParam,
    TooFewPoints,
    ZipfracError,
)

ArrayLike = Union[Sequence[float], np.ndarray]


def _frozen_array(x, what: str) -> np.ndarray:
    arr = np.array(x, dtype=float)
    if arr.ndim != 1:
        raise ZipfracError(f"{what} must be one-dimensional")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteValue(what)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class Dataset:
    """Interpolation data ``(t_i, f_i)`` with strictly increasing knots.

    Use :func:`validate_dataset` to build one from plain sequences.
    """

    knots: np.ndarray
    values: np.ndarray

    @property
    def n(self) -> int:
        return len(self.knots)

    @property
    def t1(self) -> float:
        return float(self.knots[0])

    @property
    def tn(self) -> float:
        return float(self.knots[-1])

    @property
    def length(self) -> float:
        """``l = t_n - t_1``."""
        return self.tn - self.t1

    @property
    def steps(self) -> np.ndarray:
        """Local mesh sizes ``h_j = t_{j+1} - t_j``."""
        return np.diff(self.knots)

    @property
    def h(self) -> float:
        """Global mesh size, the largest step."""
        return float(self.steps.max())

    @property
    def slopes(self) -> np.ndarray:
        """Chord slopes ``(f_{j+1} - f_j) / h_j``."""
        return np.diff(self.values) / self.steps

    def interval_of(self, t) -> np.ndarray:
        """0-based subinterval index for each ``t``.

        Intervals are half-open ``[t_j, t_{j+1})`` except the last, which is
        closed, so interior knots belong to the interval on their right.
        """
        idx = np.searchsorted(self.knots, t, side="right") - 1
        return np.clip(idx, 0, self.n - 2)


def validate_dataset(knots: ArrayLike, values: ArrayLike) -> Dataset:
    t = _frozen_array(knots, "knots")
    f = _frozen_array(values, "values")
    if len(t) != len(f):
        raise LengthMismatch("values", len(t), len(f))
    if len(t) < 3:
        raise TooFewPoints(len(t))
    bad = np.nonzero(np.diff(t) <= 0)[0]
    if bad.size:
        raise NonIncreasingKnots(int(bad[0]))
    return Dataset(t, f)


@dataclass(frozen=True)
class Signature:
    """Zipper signature; ``bits[j] == 1`` reverses the map onto interval j."""

    bits: tuple

    def __post_init__(self):
        bits = tuple(self.bits)
        for j, b in enumerate(bits):
            if b not in (0, 1):
                raise InvalidSignature(j, b)
        object.__setattr__(self, "bits", tuple(int(b) for b in bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, j):
        return self.bits[j]

    @property
    def norm_inf(self) -> int:
        return max(self.bits, default=0)

    @classmethod
    def zeros(cls, m: int) -> "Signature":
        return cls((0,) * m)

    @classmethod
    def ones(cls, m: int) -> "Signature":
        return cls((1,) * m)


@dataclass(frozen=True, eq=False)
class ZipperConfig:
    """Signature, vertical scaling factors and shape parameters.

    All parameter arrays have one entry per subinterval. Checks that need the
    dataset (contractivity) happen in :func:`validate_config`.
    """

    signature: Signature
    lambdas: np.ndarray
    alphas: np.ndarray
    betas: np.ndarray
    gammas: np.ndarray
    deltas: np.ndarray

    def __post_init__(self):
        if not isinstance(self.signature, Signature):
            object.__setattr__(self, "signature", Signature(tuple(self.signature)))
        m = len(self.signature)
        for name in ("lambdas", "alphas", "betas", "gammas", "deltas"):
            arr = _frozen_array(getattr(self, name), name)
            if len(arr) != m:
                raise LengthMismatch(name, m, len(arr))
            object.__setattr__(self, name, arr)

    @property
    def m(self) -> int:
        return len(self.signature)

    @property
    def lambda_inf(self) -> float:
        return float(np.max(np.abs(self.lambdas)))

    @property
    def is_classical(self) -> bool:
        return bool(np.all(self.lambdas == 0.0))

    def replace(self, **changes) -> "ZipperConfig":
        kw = dict(
            signature=self.signature,
            lambdas=self.lambdas,
            alphas=self.alphas,
            betas=self.betas,
            gammas=self.gammas,
            deltas=self.deltas,
        )
        kw.update(changes)
        return ZipperConfig(**kw)


def make_config(signature, lambdas, alphas=0.5, betas=0.5, gammas=0.5, deltas=1.0):
    """Build a :class:`ZipperConfig`, broadcasting scalar parameters."""
    sig = signature if isinstance(signature, Signature) else Signature(tuple(signature))
    m = len(sig)

    def expand(v):
        return np.full(m, float(v)) if np.ndim(v) == 0 else v

    return ZipperConfig(
        sig,
        expand(lambdas),
        expand(alphas),
        expand(betas),
        expand(gammas),
        expand(deltas),
    )


def validate_config(ds: Dataset, cfg: ZipperConfig) -> ZipperConfig:
    """Check ``cfg`` against ``ds``; returns ``cfg`` unchanged when valid.

    Contractivity is ``|lambda_j| < |a_j| = h_j / l``. The slope ``a_j`` is
    negative on reversed intervals, so the magnitude is what bounds the
    scaling factor.
    """
    m = ds.n - 1
    if cfg.m != m:
        raise LengthMismatch("signature", m, cfg.m)
    abs_a = ds.steps / ds.length
    for j in range(m):
        if not abs(cfg.lambdas[j]) < abs_a[j]:
            raise NonContractiveScaling(
                j, f"|lambda| = {abs(cfg.lambdas[j]):.6g} must be < |a| = {abs_a[j]:.6g}"
            )
        if not (cfg.alphas[j] > 0 and cfg.deltas[j] > 0):
            raise NonPositiveDenominatorParam(j, "alpha and delta must be > 0")
        if not (cfg.betas[j] >= 0 and cfg.gammas[j] >= 0):
            raise NonPositiveDenominatorParam(j, "beta and gamma must be >= 0")
    return cfg


@dataclass(frozen=True)
class AffineMap:
    """``L(t) = a t + b`` mapping ``[t_1, t_n]`` onto one subinterval."""

    a: float
    b: float
    t1: float
    tn: float

    def __call__(self, t):
        return self.a * t + self.b

    def inverse(self, s):
        return (s - self.b) / self.a

    @property
    def reversed(self) -> bool:
        return self.a < 0


@dataclass(frozen=True, eq=False)
class DerivativeSet:
    d: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "d", _frozen_array(self.d, "derivatives"))

    def __len__(self) -> int:
        return len(self.d)

    def __getitem__(self, i):
        return self.d[i]


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Values on a uniform grid covering ``[t_1, t_n]`` with both endpoints."""

    grid: np.ndarray
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        grid = _frozen_array(self.grid, "grid")
        vals = np.array(self.values, dtype=float)
        vals.flags.writeable = False
        if len(grid) < 2:
            raise ZipfracError("a sampled function needs at least 2 grid points")
        if len(vals) != len(grid):
            raise LengthMismatch("values", len(grid), len(vals))
        step = np.diff(grid)
        span = grid[-1] - grid[0]
        if span <= 0 or np.max(np.abs(step - span / (len(grid) - 1))) > 1e-9 * span:
            raise ZipfracError("grid must be uniform and increasing")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", vals)

    @classmethod
    def uniform(cls, t1: float, tn: float, values) -> "SampledFunction":
        values = np.asarray(values, dtype=float)
        return cls(np.linspace(t1, tn, len(values)), values)

    @property
    def size(self) -> int:
        return len(self.grid)

    def __call__(self, t):
        return np.interp(t, self.grid, self.values)

    def same_grid(self, other: "SampledFunction") -> bool:
        return self.size == other.size and bool(np.array_equal(self.grid, other.grid))
