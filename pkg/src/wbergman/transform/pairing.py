# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Pairing of boundary functions with Bergman space elements.

"""
import math

import numpy as np

from ..quadrature.integrate import DEFAULT_TOLERANCE
from ..reports import CheckReport
from ..series.boundary import BoundaryFunction, WindowError, rho
from ..series.taylor import TaylorSeries
from ..weights.weight import WeightSpec
from .elements import BergmanElement
from .norms import bergman_norm_series

#: Absolute slack of the Cauchy-Schwarz bound.
BOUND_SLACK = 1e-10


def pairing_functional(gamma_boundary: BoundaryFunction, h1: TaylorSeries) -> complex:
    """Return -sum_k c_-(k+1) a_k.

    Raises
    ------
    WindowError
        Raised if the window does not reach index -(deg h1 + 1).

    """
    required = h1.degree + 1
    if gamma_boundary.window < required:
        raise WindowError(gamma_boundary.window, required, "to pair with the series")
    negative = gamma_boundary.negative_part()[:required]
    return complex(-np.sum(negative * h1.coefficients))


def check_cs_bound(
    gamma_boundary: BoundaryFunction,
    h1: TaylorSeries,
    weight: WeightSpec,
    tol: float = DEFAULT_TOLERANCE,
) -> CheckReport:
    """Check |pairing| <= rho(gamma) * ||h1|| / pi, the weight defining both norms."""
    value = pairing_functional(gamma_boundary, h1)
    boundary_norm = rho(gamma_boundary, weight, tol)
    element_norm = bergman_norm_series(BergmanElement(h1, weight), tol)
    bound = boundary_norm * element_norm / math.pi
    passed = abs(value) <= bound + BOUND_SLACK
    return CheckReport(
        "check_cs_bound",
        "pass" if passed else "violated",
        passed,
        {
            "pairing": value,
            "modulus": abs(value),
            "bound": bound,
            "rho": boundary_norm,
            "norm": element_norm,
        },
    )
