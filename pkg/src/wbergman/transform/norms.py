# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Norms of weighted Bergman, B21 and Dirichlet type spaces.

Series forms are exact for truncated series up to the accuracy of the moments,
quadrature forms integrate the defining expressions and serve as independent
checks of the series forms.

"""
import logging
import math
from typing import Optional

import numpy as np

from ..quadrature.disk import integrate_disk, integrate_exterior
from ..quadrature.integrate import DEFAULT_TOLERANCE
from ..quadrature.rules import ANGULAR_COUNT, DiskRule
from ..series.laurent import derivative_laurent
from ..weights.moments import DIVERGENT
from ..weights.weight import WeightSpec
from .elements import BergmanElement, CauchyImage

logger = logging.getLogger(__name__)


def bergman_norm_series(
    element: BergmanElement, tol: float = DEFAULT_TOLERANCE
) -> float:
    """Return sqrt(pi * sum_k |a_k|**2 omega_k)."""
    coefficients = element.series.coefficients
    moments = element.weight.moments
    total = sum(
        abs(coefficients[k]) ** 2 * moments.moment(int(k), tol)
        for k in np.flatnonzero(coefficients)
    )
    return math.sqrt(math.pi * total)


def bergman_norm_quadrature(
    element: BergmanElement, rule: Optional[DiskRule] = None
) -> float:
    """Integrate |h1(w)|**2 omega(1 - |w|) over the unit disk.

    Raises
    ------
    ValueError
        Raised if the rule has too few angles to integrate |h1|**2 exactly in the
        angle.

    """
    required = 4 * element.series.degree + 8
    if rule is None:
        rule = DiskRule(angular_count=max(ANGULAR_COUNT, required))
    elif rule.angular_count < required:
        raise ValueError(
            f"The rule uses {rule.angular_count} angles, {required} are required"
        )
    series, weight = element.series, element.weight
    result = integrate_disk(
        lambda w: np.abs(series.evaluate(w)) ** 2,
        rule,
        radial_factor=weight.eval,
        breakpoints=weight.breakpoints,
    )
    return math.sqrt(max(float(np.real(result.value)), 0.0))


def b21_norm_series(image: CauchyImage, tol: float = DEFAULT_TOLERANCE) -> float:
    """Return sqrt(pi * sum_k |b_k|**2 / omega_(k-1))."""
    coefficients = image.series.coefficients
    moments = image.weight.moments
    total = sum(
        abs(coefficients[i]) ** 2 / moments.moment(int(i), tol)
        for i in np.flatnonzero(coefficients)
    )
    return math.sqrt(math.pi * total)


def dirichlet_norm_series(
    image: CauchyImage,
    weight: Optional[WeightSpec] = None,
    tol: float = DEFAULT_TOLERANCE,
) -> float:
    """Return sqrt(2 pi sum_k k**2 |b_k|**2 sigma_(k-1)), DIVERGENT if infinite.

    sigma_(k-1) is the integral of r**(2k-1) / omega(1 - r) over (0, 1).

    """
    weight = weight or image.weight
    coefficients = image.series.coefficients
    total = 0.0
    for i in np.flatnonzero(coefficients):
        sigma = weight.moments.inverse_moment(int(i), tol)
        if sigma == DIVERGENT:
            return DIVERGENT
        total += (i + 1) ** 2 * abs(coefficients[i]) ** 2 * sigma
    return math.sqrt(2 * math.pi * total)


def dirichlet_norm_quadrature(
    image: CauchyImage, rule: Optional[DiskRule] = None
) -> float:
    """Integrate |F'(zeta)|**2 / omega(1 - 1/|zeta|) over |zeta| > 1.

    Returns DIVERGENT when the weight makes the integral infinite.

    """
    derivative = derivative_laurent(image.series)
    weight = image.weight
    required = 2 * derivative.order + 8
    rule = rule or DiskRule(angular_count=max(ANGULAR_COUNT, required))

    def inverse_weight(t):
        return np.exp(-weight.log_eval(t))

    result = integrate_exterior(
        lambda zeta: np.abs(derivative.evaluate(zeta)) ** 2,
        rule,
        radial_factor=inverse_weight,
        angular_count=required,
    )
    if result.divergent:
        logger.info("Dirichlet norm diverges for %s", weight.spec_string)
        return DIVERGENT
    return math.sqrt(max(float(np.real(result.value)), 0.0))


def per_term_ratio(weight: WeightSpec, k: int, tol: float = DEFAULT_TOLERANCE) -> float:
    """Ratio 2 k**2 sigma_(k-1) omega_(k-1) of the k-th Dirichlet and B21 terms."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    sigma = weight.moments.inverse_moment(k - 1, tol)
    if sigma == DIVERGENT:
        return DIVERGENT
    return 2 * k**2 * sigma * weight.moments.moment(k - 1, tol)
