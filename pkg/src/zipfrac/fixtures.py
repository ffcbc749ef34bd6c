"""Reference dataset and the six reference parameter sets.

Rows a-d are fractal (row a deliberately violates the positivity bounds),
rows e-f are the classical (lambda = 0) counterparts. All rows use
alpha_j = 0.5 and delta_j = 1.
"""

from __future__ import annotations

KNOTS = [1.0, 3.0, 8.0, 10.0, 11.0, 12.0, 16.0]
VALUES = [14.0, 2.0, 0.8, 0.65, 0.75, 0.7, 0.69]

ALPHA = 0.5
DELTA = 1.0

_ONES = [1, 1, 1, 1, 1, 1]
_ZEROS = [0, 0, 0, 0, 0, 0]
_BETA_D = [0.5028, 3.56, 6.5, 12.5, 22.5, 0.5]
_GAMMA_D = [0.5, 5.5, 53.0, 0.5221, 0.5, 0.5]

ROWS = {
    "fig1a": dict(
        lambdas=[0.1323, 0.2419, 0.0561, 0.0454, 0.0526, 0.149],
        betas=[0.5028, 1.1853, 0.5, 0.5, 0.5, 3.9649],
        gammas=[0.5, 0.5, 0.5868, 0.5221, 0.5, 0.5],
        signature=_ONES,
    ),
    "fig1b": dict(
        lambdas=[0.1323, 0.0201, 0.0261, 0.0454, 0.0426, 0.049],
        betas=[0.5028, 172.6956, 6.5, 0.5, 22.5, 0.5],
        gammas=[0.5, 5.5, 0.5300, 0.5221, 0.5, 0.5],
        signature=_ONES,
    ),
    "fig1c": dict(
        lambdas=[0.1323, 0.0201, 0.0400, 0.0454, 0.0001, 0.033],
        betas=[0.5028, 172.6956, 6.5, 0.5, 22.5, 0.5],
        gammas=[0.5, 5.5, 0.5300, 0.5221, 0.5, 0.5],
        signature=_ONES,
    ),
    "fig1d": dict(
        lambdas=[0.1323, 0.0201, 0.0261, 0.0454, 0.0426, 0.049],
        betas=_BETA_D,
        gammas=_GAMMA_D,
        signature=_ONES,
    ),
    "fig1e": dict(lambdas=[0.0] * 6, betas=_BETA_D, gammas=_GAMMA_D, signature=_ZEROS),
    "fig1f": dict(lambdas=[0.0] * 6, betas=_BETA_D, gammas=_GAMMA_D, signature=_ONES),
}


def run_config(name: str) -> dict:
    """The row as a JSON-ready run configuration."""
    row = ROWS[name]
    return {
        "data": {"knots": list(KNOTS), "values": list(VALUES)},
        "signature": list(row["signature"]),
        "lambdas": list(row["lambdas"]),
        "alphas": ALPHA,
        "betas": list(row["betas"]),
        "gammas": list(row["gammas"]),
        "deltas": DELTA,
        "eval": {"grid_size": 1025, "tol": 1e-12, "max_iters": 200},
        "outputs": {"csv": f"{name}.csv", "json": f"{name}.json", "svg": f"{name}.svg"},
    }
