"""Run-config parsing and CSV / SVG output."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from xml.sax.saxutils import escape

from .data_model import (
    Dataset,
    DerivativeSet,
    Signature,
    ZipperConfig,
    make_config,
    validate_config,
    validate_dataset,
)
from .derivatives import amm_derivatives, set_derivatives
from .errors import IntervalError, NonContractiveScaling, ZipfracError
from .evaluator import EvalSettings

SHAPE_FIELDS = ("alphas", "betas", "gammas", "deltas")
SHAPE_DEFAULTS = {"alphas": 0.5, "betas": 0.5, "gammas": 0.5, "deltas": 1.0}


class ConfigError(ZipfracError):
    def __init__(self, path: str, detail: str):
        self.path = path
        super().__init__(f"{path}: {detail}")


@dataclass
class RunConfig:
    dataset: Dataset
    derivatives: DerivativeSet
    signature: Signature
    config: ZipperConfig | None
    settings: EvalSettings
    outputs: dict = field(default_factory=dict)
    derivatives_given: bool = False


def _number(x, path):
    if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
        raise ConfigError(path, f"expected a finite number, got {x!r}")
    return float(x)


def _numbers(raw, path, length=None, allow_scalar=False):
    if allow_scalar and not isinstance(raw, list):
        return _number(raw, path)
    if not isinstance(raw, list):
        raise ConfigError(path, "expected a list of numbers")
    if length is not None and len(raw) != length:
        raise ConfigError(path, f"expected {length} entries, got {len(raw)}")
    return [_number(x, f"{path}[{i}]") for i, x in enumerate(raw)]


def parse_run_config(raw: dict, require_params: bool = True) -> RunConfig:
    """Turn a decoded JSON config into validated model objects.

    Errors carry the offending field path, e.g. ``lambdas[1]``.
    """
    if not isinstance(raw, dict):
        raise ConfigError("<root>", "expected a JSON object")
    data = raw.get("data")
    if not isinstance(data, dict):
        raise ConfigError("data", "missing object with 'knots' and 'values'")
    knots = _numbers(data.get("knots"), "data.knots")
    values = _numbers(data.get("values"), "data.values")
    try:
        ds = validate_dataset(knots, values)
    except ZipfracError as exc:
        raise ConfigError("data", str(exc)) from exc
    m = ds.n - 1

    if raw.get("derivatives") is not None:
        d = set_derivatives(ds, _numbers(raw["derivatives"], "derivatives", ds.n))
        given = True
    else:
        d = amm_derivatives(ds)
        given = False

    sig_raw = raw.get("signature", [0] * m)
    if not isinstance(sig_raw, list) or len(sig_raw) != m:
        raise ConfigError("signature", f"expected a list of {m} bits")
    for i, b in enumerate(sig_raw):
        if b not in (0, 1) or isinstance(b, bool):
            raise ConfigError(f"signature[{i}]", f"expected 0 or 1, got {b!r}")
    sig = Signature(tuple(sig_raw))

    cfg = None
    if "lambdas" in raw or require_params:
        lam = _numbers(raw.get("lambdas"), "lambdas", m, allow_scalar=True)
        shapes = {
            k: _numbers(raw.get(k, SHAPE_DEFAULTS[k]), k, m, allow_scalar=True)
            for k in SHAPE_FIELDS
        }
        cfg = make_config(sig, lam, **shapes)
        try:
            validate_config(ds, cfg)
        except IntervalError as exc:
            field_name = "lambdas" if isinstance(exc, NonContractiveScaling) else "shape parameters"
            raise ConfigError(f"{field_name}[{exc.index}]", str(exc)) from exc

    ev = raw.get("eval", {}) or {}
    try:
        settings = EvalSettings(
            grid_size=int(ev.get("grid_size", 1025)),
            tol=float(ev.get("tol", 1e-12)),
            max_iters=int(ev.get("max_iters", 200)),
        )
    except (TypeError, ValueError) as exc:  # ZipfracError is a ValueError
        raise ConfigError("eval", str(exc)) from exc

    outputs = raw.get("outputs", {}) or {}
    if not isinstance(outputs, dict):
        raise ConfigError("outputs", "expected an object")
    return RunConfig(ds, d, sig, cfg, settings, dict(outputs), given)


def load_run_config(path, require_params: bool = True) -> RunConfig:
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}", exc.msg) from exc
    return parse_run_config(raw, require_params)


def write_csv(path, t, values) -> None:
    """``t,value`` rows with 17 significant digits (round-trips exactly)."""
    with open(path, "w", newline="") as fh:
        fh.write("t,value\n")
        for a, b in zip(t, values):
            fh.write(f"{a:.17g},{b:.17g}\n")


def read_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if rows[0] != ["t", "value"]:
        raise ZipfracError(f"{path}: unexpected header {rows[0]}")
    arr = np.array(rows[1:], dtype=float)
    return arr[:, 0], arr[:, 1]


def svg_plot(t, values, knots=(), knot_values=(), width=800, height=500, title=""):
    """Self-contained SVG: curve polyline, knot markers, red sub-zero fill."""
    t = np.asarray(t, dtype=float)
    v = np.asarray(values, dtype=float)
    xs = np.concatenate([t, np.asarray(knots, dtype=float)])
    ys = np.concatenate([v, np.asarray(knot_values, dtype=float)])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    dx = (x1 - x0) or 1.0
    dy = (y1 - y0) or 1.0
    x0, x1 = x0 - 0.05 * dx, x1 + 0.05 * dx
    y0, y1 = y0 - 0.05 * dy, y1 + 0.05 * dy

    def px(x):
        return (np.asarray(x) - x0) / (x1 - x0) * width

    def py(y):
        return height - (np.asarray(y) - y0) / (y1 - y0) * height

    def pts(xa, ya):
        return " ".join(f"{a:.3f},{b:.3f}" for a, b in zip(px(xa), py(ya)))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{escape(title)}</title>",
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if y0 < 0 < y1:
        zy = float(py(0.0))
        parts.append(f'<line x1="0" y1="{zy:.3f}" x2="{width}" y2="{zy:.3f}" '
                     'stroke="#999" stroke-dasharray="4 3"/>')
        neg = v < 0
        edges = np.flatnonzero(np.diff(np.concatenate([[0], neg.astype(int), [0]])))
        for start, stop in zip(edges[::2], edges[1::2]):
            seg_t = t[start:stop]
            poly = np.concatenate([[seg_t[0]], seg_t, [seg_t[-1]]])
            polv = np.concatenate([[0.0], v[start:stop], [0.0]])
            parts.append(f'<polygon points="{pts(poly, polv)}" fill="red" fill-opacity="0.4"/>')
    parts.append(f'<polyline points="{pts(t, v)}" fill="none" stroke="#1f4e9c" stroke-width="1.5"/>')
    for a, b in zip(px(knots), py(knot_values)):
        parts.append(f'<circle cx="{a:.3f}" cy="{b:.3f}" r="4" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
