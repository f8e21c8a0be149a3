# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Regularized transforms gamma_n and their recovery from boundary samples.

gamma_n is the weighted Cauchy transform in which the weight is multiplied by the
cutoff alpha_n(1 - |psi(z)|). The integrand vanishes outside of the closure of G_n,
so gamma_n is analytic outside of it, and in particular across the boundary of G.

"""
import logging
from typing import Optional, Tuple

import numpy as np

from ..conformal.maps import ConformalMap
from ..quadrature.integrate import (
    DEFAULT_TOLERANCE,
    QuadratureAccuracyError,
    integrate_01,
)
from ..quadrature.rules import DiskRule
from ..series.boundary import (
    DEFAULT_WINDOW,
    BoundaryFunction,
    WindowError,
    fourier_coeffs,
)
from ..series.laurent import EVAL_EXCLUSION, LaurentSeries
from ..series.taylor import TaylorSeries
from ..transform.cauchy import STANDOFF, StandoffError, weighted_cauchy_integral
from ..weights.weight import WeightSpec
from .cutoff import CutoffFamily, cutoff_eval

logger = logging.getLogger(__name__)


def regularized_moment(
    weight: WeightSpec, k: int, cutoff: CutoffFamily, tol: float = DEFAULT_TOLERANCE
) -> float:
    """Moment 2 * integral of (1 - t)**(2k + 1) alpha_n(t) omega(t) over (0, 1)."""
    if k < 0:
        raise ValueError(f"Moment indices are non-negative, got {k}")
    if cutoff.is_unit:
        return weight.moments.moment(k, tol)
    exponent = 2 * k + 1

    def integrand(t):
        radial = np.exp(exponent * np.log1p(-t))
        return 2.0 * radial * weight.eval(t) * cutoff_eval(cutoff, t)

    result = integrate_01(
        integrand, tol, breakpoints=cutoff.breakpoints + tuple(weight.breakpoints)
    )
    if result.divergent:
        raise QuadratureAccuracyError(
            result.value,
            result.error,
            f"regularized moment {k} of {weight.spec_string} diverges",
        )
    return float(result.value)


def gamma_n_coeffs(
    h1: TaylorSeries,
    weight: WeightSpec,
    cutoff: CutoffFamily,
    window: int = DEFAULT_WINDOW,
    tol: float = DEFAULT_TOLERANCE,
) -> LaurentSeries:
    """Laurent coefficients b_k^n = -conj(a_(k-1)) omega^n_(k-1) of gamma_n on the
    disk.

    omega^n_j is the regularized moment of index j. The same coefficients are the
    negative Fourier coefficients of gamma_n o phi for every map phi.

    Raises
    ------
    WindowError
        Raised if the series has more coefficients than the window holds.

    """
    coefficients = h1.coefficients
    if h1.is_zero:
        return LaurentSeries([])
    if coefficients.size > window:
        raise WindowError(window, coefficients.size, "one per Taylor coefficient")
    b = np.zeros(coefficients.size, dtype=complex)
    for i in np.flatnonzero(coefficients):
        moment = regularized_moment(weight, int(i), cutoff, tol)
        b[i] = -np.conj(coefficients[i]) * moment
    logger.debug("gamma_n coefficients for n=%s: %s", cutoff.n, b)
    return LaurentSeries(b)


def gamma_n_eval(
    h1: TaylorSeries,
    weight: WeightSpec,
    conformal_map: ConformalMap,
    cutoff: CutoffFamily,
    zeta,
    rule: Optional[DiskRule] = None,
    standoff: float = STANDOFF,
):
    """Evaluate gamma_n at points outside the closure of G_n by 2D quadrature.

    Raises
    ------
    StandoffError
        Raised if a point lies closer than standoff to the closure of G_n.

    """
    if cutoff.is_unit:
        radius, breakpoints = 1.0, tuple(weight.breakpoints)
    else:
        radius = 1.0 - 1.0 / cutoff.n
        breakpoints = cutoff.breakpoints + tuple(weight.breakpoints)

    def factor(t):
        return weight.eval(t) * cutoff_eval(cutoff, t)

    return weighted_cauchy_integral(
        h1.evaluate,
        weight,
        conformal_map,
        zeta,
        radial_factor=factor,
        breakpoints=breakpoints,
        support_radius=radius,
        rule=rule,
        standoff=standoff,
        degree=h1.degree,
    )


def sample_gamma_n_on_boundary(
    h1: TaylorSeries,
    weight: WeightSpec,
    conformal_map: ConformalMap,
    cutoff: CutoffFamily,
    count: int,
    rule: Optional[DiskRule] = None,
) -> np.ndarray:
    """Values of gamma_n o phi at the angles 2 pi j / count.

    The boundary of G lies at a positive distance of the closure of G_n, which is
    why the cutoff must have a finite index.

    """
    if cutoff.is_unit:
        raise ValueError("Boundary samples require a cutoff of finite index")
    theta = 2 * np.pi * np.arange(count) / count
    points = conformal_map.boundary_point(theta)
    return np.asarray(
        gamma_n_eval(h1, weight, conformal_map, cutoff, points, rule, standoff=0.0)
    )


def cauchy_type_integral(
    samples,
    zeta,
    window: Optional[int] = None,
    standoff: float = EVAL_EXCLUSION,
) -> Tuple[np.ndarray, BoundaryFunction]:
    """Evaluate (1 / 2 pi i) * contour integral of f(t) / (t - zeta) on the circle.

    The samples are values of f at the angles 2 pi j / N. For |zeta| > 1 the integral
    equals -sum_k f_-k zeta**-k, the returned window holds the coefficients f_k
    extracted from the same samples.

    Parameters
    ----------
    samples : array-like
        Values of f on the unit circle.
    zeta : complex or array-like
        Points with |zeta| >= 1 + standoff.
    window : int, optional
        Half width of the returned window, the largest allowed by the sample count
        by default.

    Returns
    -------
    values : np.ndarray
        Integral at every point.
    window : BoundaryFunction
        Fourier coefficients of the samples.

    """
    samples = np.asarray(samples, dtype=complex).ravel()
    count = samples.size
    zeta = np.asarray(zeta, dtype=complex)
    closest = float(np.min(np.abs(zeta))) - 1.0 if zeta.size else np.inf
    if closest < standoff:
        raise StandoffError(closest, standoff)
    window = (count - 4) // 4 if window is None else window
    t = np.exp(2j * np.pi * np.arange(count) / count)
    kernel = t / (t - zeta[..., None])
    values = (kernel @ samples) / count
    return values[()], fourier_coeffs(samples, window)
