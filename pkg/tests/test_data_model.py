import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zipfrac import (
    LengthMismatch,
    NonContractiveScaling,
    NonIncreasingKnots,
    NonPositiveDenominatorParam,
    SampledFunction,
    Signature,
    TooFewPoints,
    ZipfracError,
    affine_map,
    make_config,
    validate_config,
    validate_dataset,
)
from zipfrac import fixtures


def test_reference_is_valid(ref_data):
    assert ref_data.n == 7
    assert ref_data.length == 15
    assert ref_data.h == 5


def test_too_few_points():
    with pytest.raises(TooFewPoints):
        validate_dataset([0, 1], [1, 1])


def test_repeated_knot():
    with pytest.raises(NonIncreasingKnots) as exc:
        validate_dataset([0, 2, 2, 3], [1, 1, 1, 1])
    assert exc.value.index == 1


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        validate_dataset([0, 1, 2], [1, 1])


def test_non_finite_rejected():
    with pytest.raises(ZipfracError):
        validate_dataset([0, 1, 2], [1, np.nan, 1])


def test_dataset_is_immutable(ref_data):
    with pytest.raises(ValueError):
        ref_data.knots[0] = 5.0


def test_signature_bits():
    assert Signature((0, 1, 1)).norm_inf == 1
    assert Signature.zeros(4).norm_inf == 0
    with pytest.raises(ZipfracError):
        Signature((0, 2))


def _row_b():
    row = fixtures.ROWS["fig1b"]
    return make_config(row["signature"], row["lambdas"], 0.5, row["betas"], row["gammas"], 1.0)


def test_row_b_config_valid(ref_data):
    cfg = _row_b()
    assert validate_config(ref_data, cfg) is cfg


def test_non_contractive_names_interval(ref_data):
    lam = list(fixtures.ROWS["fig1b"]["lambdas"])
    lam[1] = 0.40  # |a_2| = 5/15
    cfg = _row_b().replace(lambdas=lam)
    with pytest.raises(NonContractiveScaling) as exc:
        validate_config(ref_data, cfg)
    assert exc.value.interval == 2
    assert "interval 2" in str(exc.value)


def test_zero_alpha_rejected(ref_data):
    alphas = [0.5] * 6
    alphas[2] = 0.0
    with pytest.raises(NonPositiveDenominatorParam) as exc:
        validate_config(ref_data, _row_b().replace(alphas=alphas))
    assert exc.value.interval == 3


def test_negative_gamma_rejected(ref_data):
    gammas = [0.5] * 6
    gammas[0] = -0.1
    with pytest.raises(NonPositiveDenominatorParam):
        validate_config(ref_data, _row_b().replace(gammas=gammas))


def test_config_length_mismatch():
    with pytest.raises(LengthMismatch):
        make_config([0, 1], [0.1, 0.1, 0.1])


def test_scalar_broadcast():
    cfg = make_config([1, 0, 1], 0.0, alphas=2.0)
    assert list(cfg.alphas) == [2.0, 2.0, 2.0]
    assert cfg.is_classical


def test_sampled_function_requires_uniform_grid():
    with pytest.raises(ZipfracError):
        SampledFunction(np.array([0.0, 1.0, 3.0]), np.zeros(3))
    f = SampledFunction.uniform(0.0, 2.0, [0.0, 1.0, 4.0])
    assert f(0.5) == pytest.approx(0.5)


knot_lists = st.lists(
    st.floats(0.01, 10.0, allow_nan=False), min_size=3, max_size=12
).map(lambda steps: np.concatenate([[0.0], np.cumsum(steps)]))


@settings(max_examples=60, deadline=None)
@given(knot_lists, st.data())
def test_affine_map_properties(knots, data):
    ds = validate_dataset(knots, np.ones(len(knots)))
    abs_a = []
    for j in range(ds.n - 1):
        eps = data.draw(st.integers(0, 1))
        L = affine_map(ds, j, eps)
        abs_a.append(abs(L.a))
        assert abs(L.a) == ds.steps[j] / ds.length
        assert (L.a < 0) == (eps == 1)
        lo, hi = ds.knots[j + eps], ds.knots[j + 1 - eps]
        scale = max(abs(ds.t1), abs(ds.tn), 1.0)
        assert abs(L(ds.t1) - lo) <= 4e-15 * scale
        assert abs(L(ds.tn) - hi) <= 4e-15 * scale
        flipped = affine_map(ds, j, 1 - eps)
        assert flipped.a == -L.a
        assert abs(flipped(ds.t1) - L(ds.tn)) <= 4e-15 * scale
        assert abs(flipped(ds.tn) - L(ds.t1)) <= 4e-15 * scale
    assert sum(abs_a) == pytest.approx(1.0, abs=1e-12)
