"""Rational cubic trigonometric zipper fractal interpolation."""

from .data_model import (
    AffineMap,
    Dataset,
    DerivativeSet,
    SampledFunction,
    Signature,
    ZipperConfig,
    make_config,
    validate_config,
    validate_dataset,
)
from .derivatives import amm_derivatives, set_derivatives
from .error_analysis import ErrorBoundInputs, ErrorBoundReport, bound_report, measured_gap
from .errors import *  # noqa: F401,F403
from .evaluator import (
    EvalReport,
    EvalSettings,
    apply_operator,
    classical_eval,
    eval_at,
    evaluate,
    fixed_point,
)
from .ifs import (
    RationalCoeffs,
    TrigBasis,
    ZipperIfs,
    affine_map,
    build_ifs,
    eval_M,
    eval_dM,
    rational_coeffs,
    trig_basis,
)
from .positivity import (
    PositivityBounds,
    PositivityReport,
    certify,
    empirical_check,
    lambda_bounds,
    shape_bounds,
)

__version__ = "0.1.0"
