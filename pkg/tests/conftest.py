import numpy as np
import pytest

from zipfrac import amm_derivatives, build_ifs, make_config, validate_dataset
from zipfrac import fixtures


@pytest.fixture(scope="session")
def ref_data():
    return validate_dataset(fixtures.KNOTS, fixtures.VALUES)


@pytest.fixture(scope="session")
def ref_d(ref_data):
    return amm_derivatives(ref_data)


def row_config(name):
    row = fixtures.ROWS[name]
    return make_config(row["signature"], row["lambdas"], fixtures.ALPHA,
                       row["betas"], row["gammas"], fixtures.DELTA)


@pytest.fixture(scope="session")
def row_ifs(ref_data, ref_d):
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = build_ifs(ref_data, ref_d, row_config(name))
        return cache[name]

    return get


def random_dataset(rng, n=None, positive=False):
    n = n or int(rng.integers(3, 10))
    knots = np.cumsum(rng.uniform(0.2, 3.0, n)) + rng.uniform(-5, 5)
    if positive:
        values = rng.uniform(0.1, 10.0, n)
    else:
        values = rng.uniform(-5.0, 5.0, n)
    return validate_dataset(knots, values)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)
