"""Knot derivative estimates."""

from __future__ import annotations

import numpy as np

from .data_model import Dataset, DerivativeSet
from .errors import LengthMismatch


def amm_derivatives(ds: Dataset) -> DerivativeSet:
    """Arithmetic mean method.

    Interior knots get the step-weighted mean of the adjacent chord slopes,

        d_i = (h_i D_{i-1} + h_{i-1} D_i) / (h_{i-1} + h_i),

    and the end knots use three-point extrapolation,

        d_1 = D_1 + (D_1 - D_2) h_1 / (h_1 + h_2),
        d_n = D_{n-1} + (D_{n-1} - D_{n-2}) h_{n-1} / (h_{n-2} + h_{n-1}).

    The scheme is exact on affine data.
    """
    h = ds.steps
    D = ds.slopes
    d = np.empty(ds.n)
    d[1:-1] = (h[1:] * D[:-1] + h[:-1] * D[1:]) / (h[:-1] + h[1:])
    d[0] = D[0] + (D[0] - D[1]) * h[0] / (h[0] + h[1])
    d[-1] = D[-1] + (D[-1] - D[-2]) * h[-1] / (h[-2] + h[-1])
    return DerivativeSet(d)


def set_derivatives(ds: Dataset, d) -> DerivativeSet:
    """Wrap user-supplied knot derivatives, e.g. exact ones of a known function."""
    d = np.asarray(d, dtype=float)
    if d.shape != (ds.n,):
        raise LengthMismatch("derivatives", ds.n, d.size)
    return DerivativeSet(d)
