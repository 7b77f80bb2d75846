"""Exact basis conversion between Bernstein polynomials and generalized
Chebyshev polynomials of the second kind on [0, 1]."""
from .bernstein import BernsteinPoly, elevate, evaluate, weighted_inner_product
from .exactnum import ExactScalar, beta_integral, gamma_half
from .leastsq import Basis, FitProblem, FitResult, Samples, fit
from .transform import (
    ConsistencyReport,
    ConversionMatrix,
    Direction,
    Provenance,
    consistency_report,
    convert_coeffs,
    forward_matrix,
    inverse_matrix_exact,
    inverse_matrix_printed,
)
from .tschebyscheff import Convention, GenChebSeries, SignMode, WeightParams

__version__ = "0.1.0"

__all__ = [
    "BernsteinPoly",
    "elevate",
    "evaluate",
    "weighted_inner_product",
    "ExactScalar",
    "beta_integral",
    "gamma_half",
    "Basis",
    "FitProblem",
    "FitResult",
    "Samples",
    "fit",
    "ConsistencyReport",
    "ConversionMatrix",
    "Direction",
    "Provenance",
    "consistency_report",
    "convert_coeffs",
    "forward_matrix",
    "inverse_matrix_exact",
    "inverse_matrix_printed",
    "Convention",
    "GenChebSeries",
    "SignMode",
    "WeightParams",
]
