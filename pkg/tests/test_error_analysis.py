import math

import numpy as np
import pytest

from conftest import row_config
from zipfrac import (
    ErrorBoundInputs,
    GridMismatch,
    SampledFunction,
    ZipfracError,
    bound_report,
    build_ifs,
    evaluate,
    fixed_point,
    make_config,
    measured_gap,
    set_derivatives,
    validate_dataset,
)


@pytest.fixture(scope="module")
def sine_data():
    t = np.linspace(0, 2 * np.pi, 7)
    ds = validate_dataset(t, 2 + np.sin(t))
    return ds, set_derivatives(ds, np.cos(t))


def test_classical_zero_signature_is_spline_term_only(sine_data):
    ds, d = sine_data
    rep = bound_report(ds, d, make_config([0] * 6, 0.0, 1, 1.5, 1.5, 1),
                       ErrorBoundInputs(psi_sup=3, psi3_sup=1, c=10))
    assert rep.zipper_term == 0 and rep.fractal_term == 0
    assert rep.total == rep.spline_term == pytest.approx(0.5 * (np.pi / 3) ** 3 * 10)


def test_row_b_without_psi_stats(ref_data, ref_d):
    rep = bound_report(ref_data, ref_d, row_config("fig1b"))
    assert rep.spline_term is None and rep.total is None
    assert any("requires psi" in n for n in rep.notes)
    lam = 0.1323
    h = 5.0
    Phi = 14.0
    eta = abs(-1338 / 175)
    assert rep.zipper_term == pytest.approx(1 / (1 - lam) * (Phi + 4 * h * eta / math.pi), rel=1e-12)
    E1 = max(abs(x) for x in ref_d.d[:-1])
    E2 = max(abs(ref_d.d[0]), abs(ref_d.d[-1]))
    E = Phi + 4 * h / math.pi * E1
    Es = 14.0 + 4 * h / math.pi * E2
    assert rep.fractal_term == pytest.approx(lam / (1 - lam) * (E + Es), rel=1e-12)
    assert rep.xi > 0


def test_total_is_sum(sine_data):
    ds, d = sine_data
    cfg = make_config([1, 0, 1, 0, 1, 0], 0.05, 1, 1.5, 1.5, 1)
    rep = bound_report(ds, d, cfg, ErrorBoundInputs(psi_sup=3, psi3_sup=1, c=10))
    assert rep.total == rep.zipper_term + rep.spline_term + rep.fractal_term
    assert min(rep.zipper_term, rep.spline_term, rep.fractal_term) > 0


def test_h_cubed_scaling():
    inputs = ErrorBoundInputs(psi_sup=1, psi3_sup=2, c=3)
    terms = []
    for scale in (1.0, 2.0):
        ds = validate_dataset(scale * np.array([0, 1, 3, 4.0]), [1, 2, 2, 1])
        d = set_derivatives(ds, [0, 0, 0, 0])
        terms.append(bound_report(ds, d, make_config([0, 0, 0], 0.0), inputs).spline_term)
    assert terms[1] == pytest.approx(8 * terms[0], rel=1e-14)


def test_default_c_flagged(sine_data):
    ds, d = sine_data
    rep = bound_report(ds, d, make_config([0] * 6, 0.0), ErrorBoundInputs(psi3_sup=1))
    assert any("illustrative" in n for n in rep.notes)


def test_inputs_validated():
    with pytest.raises(ZipfracError):
        ErrorBoundInputs(c=0)
    with pytest.raises(ZipfracError):
        ErrorBoundInputs(C=1.5)
    with pytest.raises(ZipfracError):
        ErrorBoundInputs(psi3_sup=-1)


def test_measured_gap_basics():
    f = SampledFunction.uniform(0, 1, [1.0, 2.0, 3.0])
    assert measured_gap(f, f) == 0
    g = SampledFunction.uniform(0, 1, [1.0, 2.5, 3.0])
    assert measured_gap(f, g) == 0.5
    with pytest.raises(GridMismatch):
        measured_gap(f, SampledFunction.uniform(0, 2, [1.0, 2.0, 3.0]))


def test_zipper_gap_below_zipper_term(ref_data, ref_d):
    for name in ("fig1b", "fig1c", "fig1d"):
        cfg = row_config(name)
        zero = cfg.replace(signature=[0] * 6)
        a = fixed_point(build_ifs(ref_data, ref_d, cfg)).result
        b = fixed_point(build_ifs(ref_data, ref_d, zero)).result
        assert measured_gap(a, b) <= bound_report(ref_data, ref_d, cfg).zipper_term


def test_gap_shrinks_with_lambda(sine_data):
    ds, d = sine_data
    sig = [1, 0, 1, 1, 0, 0]
    base = fixed_point(build_ifs(ds, d, make_config(sig, 0.0, 1, 1.5, 1.5, 1))).result
    gaps = []
    for lam in (0.04, 0.02, 0.01, 0.005):
        res = fixed_point(build_ifs(ds, d, make_config(sig, lam, 1, 1.5, 1.5, 1))).result
        gaps.append(measured_gap(res, base))
    assert all(b <= 1.1 * a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 0.2 * gaps[0]
