"""``zipfrac`` command-line front end."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import fixtures
from .data_model import validate_dataset, make_config
from .derivatives import amm_derivatives
from .errors import ZipfracError
from .evaluator import EvalSettings, evaluate, fixed_point
from .ifs import build_ifs
from .io import load_run_config, svg_plot, write_csv
from .positivity import bounds, empirical_check

log = logging.getLogger("zipfrac")

NEAR_BOUND = 1e-9


def _outdir(args) -> Path:
    out = Path(args.outdir or os.environ.get("ZIPFRAC_OUTDIR") or ".")
    out.mkdir(parents=True, exist_ok=True)
    return out


def _resolve(outdir: Path, name) -> Path:
    p = Path(name)
    return p if p.is_absolute() else outdir / p


def _settings(args, base: EvalSettings) -> EvalSettings:
    changes = {}
    if getattr(args, "grid", None) is not None:
        changes["grid_size"] = args.grid
    if getattr(args, "tol", None) is not None:
        changes["tol"] = args.tol
    if getattr(args, "max_iters", None) is not None:
        changes["max_iters"] = args.max_iters
    return replace(base, **changes) if changes else base


def _warn_near_bounds(ds, d, cfg) -> None:
    """Flag parameters within NEAR_BOUND of a strict positivity bound."""
    if np.any(ds.values <= 0):
        return
    b = bounds(ds, cfg.signature)
    for j, (lam, top) in enumerate(zip(cfg.lambdas, b.lambda_max)):
        if abs(lam - top) < NEAR_BOUND:
            log.warning("interval %d: lambda within %g of its bound %.12g", j + 1, NEAR_BOUND, top)
    if np.all((cfg.lambdas >= 0) & (cfg.lambdas < b.lambda_max)):
        full = bounds(ds, cfg.signature, d, cfg.lambdas, cfg.alphas, cfg.deltas)
        for j in range(cfg.m):
            if abs(cfg.betas[j] - full.beta_min[j]) < NEAR_BOUND:
                log.warning("interval %d: beta within %g of its bound", j + 1, NEAR_BOUND)
            if abs(cfg.gammas[j] - full.gamma_min[j]) < NEAR_BOUND:
                log.warning("interval %d: gamma within %g of its bound", j + 1, NEAR_BOUND)


def _run(ds, d, cfg, settings, csv_path=None, svg_path=None, title=""):
    ifs = build_ifs(ds, d, cfg)
    report = fixed_point(ifs, settings)
    res = report.result
    if csv_path is not None:
        write_csv(csv_path, res.grid, res.values)
    if svg_path is not None:
        Path(svg_path).write_text(svg_plot(res.grid, res.values, ds.knots, ds.values, title=title))
    residual = float(np.max(np.abs(evaluate(ifs, res, ds.knots) - ds.values)))
    return ifs, report, residual


def cmd_interpolate(args) -> int:
    rc = load_run_config(args.config)
    settings = _settings(args, rc.settings)
    outdir = _outdir(args)
    stem = Path(args.config).stem
    csv_path = _resolve(outdir, rc.outputs.get("csv", f"{stem}.csv"))
    json_path = _resolve(outdir, rc.outputs.get("json", f"{stem}.json"))
    svg_name = rc.outputs.get("svg")
    svg_path = _resolve(outdir, svg_name) if svg_name else None

    _, report, residual = _run(rc.dataset, rc.derivatives, rc.config, settings,
                               csv_path, svg_path, title=stem)
    summary = report.as_dict()
    summary["knot_residual_max"] = residual
    summary["derivatives"] = "user" if rc.derivatives_given else "amm"
    json_path.write_text(json.dumps(summary, indent=2) + "\n")
    print(json.dumps(summary, indent=2))
    if not report.converged:
        log.error("not converged after %d iterations", report.iterations)
        return 1
    return 0


def cmd_bounds(args) -> int:
    rc = load_run_config(args.config, require_params=False)
    cfg = rc.config
    if cfg is None:
        result = bounds(rc.dataset, rc.signature)
    else:
        result = bounds(rc.dataset, rc.signature, rc.derivatives,
                        cfg.lambdas, cfg.alphas, cfg.deltas)
        _warn_near_bounds(rc.dataset, rc.derivatives, cfg)
    print(json.dumps(result.as_dict(), indent=2))
    return 0


def cmd_check(args) -> int:
    rc = load_run_config(args.config)
    settings = _settings(args, rc.settings)
    _warn_near_bounds(rc.dataset, rc.derivatives, rc.config)
    ifs = build_ifs(rc.dataset, rc.derivatives, rc.config)
    report = empirical_check(ifs, settings, probe_size=args.probe)
    out = report.as_dict(rc.dataset)
    print(json.dumps(out, indent=2))
    return 0 if report.certified and report.empirical_min > 0 else 1


def run_demo(outdir: Path, settings: EvalSettings | None = None) -> dict:
    """Write CSV + SVG for every reference parameter set into ``outdir``."""
    settings = settings or EvalSettings()
    ds = validate_dataset(fixtures.KNOTS, fixtures.VALUES)
    d = amm_derivatives(ds)
    summary = {}
    for name, row in fixtures.ROWS.items():
        cfg = make_config(row["signature"], row["lambdas"], fixtures.ALPHA,
                          row["betas"], row["gammas"], fixtures.DELTA)
        _, report, residual = _run(ds, d, cfg, settings,
                                   outdir / f"{name}.csv", outdir / f"{name}.svg", title=name)
        summary[name] = dict(report.as_dict(), knot_residual_max=residual,
                             grid_min=float(report.result.values.min()))
    return summary


def cmd_demo(args) -> int:
    summary = run_demo(_outdir(args), _settings(args, EvalSettings()))
    print(json.dumps(summary, indent=2))
    return 0 if all(s["converged"] for s in summary.values()) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zipfrac",
        description="Rational cubic trigonometric zipper fractal interpolation.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--outdir", help="output root (default: $ZIPFRAC_OUTDIR or .)")
    common.add_argument("--grid", type=int, help="override eval.grid_size")
    common.add_argument("--tol", type=float, help="override eval.tol")
    common.add_argument("--max-iters", type=int, dest="max_iters", help="override eval.max_iters")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("interpolate", parents=[common], help="evaluate and write CSV/JSON/SVG")
    p.add_argument("config")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("bounds", parents=[common], help="positivity parameter bounds")
    p.add_argument("config")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("check", parents=[common], help="certify and probe positivity")
    p.add_argument("config")
    p.add_argument("--probe", type=int, default=10001, help="probe grid size")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("demo", parents=[common], help="render the six reference panels")
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except ZipfracError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
