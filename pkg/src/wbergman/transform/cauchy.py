# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""The weighted Cauchy transform

    (K g)(zeta) = (1 / pi) * integral over G of conj(g(z)) omega(z) / (z - zeta) dm(z)

where omega(z) = omega(1 - |psi(z)|) is the weight transported to the domain.

On the disk the transform of sum_k a_k z**k is the Laurent series
sum_k b_k zeta**-k with b_k = -conj(a_(k-1)) omega_(k-1).

"""
import logging
from typing import Optional

import numpy as np

from ..conformal.maps import ConformalMap
from ..conformal.validation import distance_to_image
from ..quadrature.disk import integrate_domain, kernel_angular_count
from ..quadrature.integrate import DEFAULT_TOLERANCE
from ..quadrature.rules import DiskRule
from ..series.laurent import LaurentSeries
from ..weights.weight import WeightSpec
from .elements import BergmanElement, CauchyImage

logger = logging.getLogger(__name__)

#: Default minimal distance between evaluation points and the closed domain.
STANDOFF = 0.05

#: Default number of Laurent coefficients of exterior expansions.
EXTERIOR_TERMS = 64


class StandoffError(ValueError):
    """Raised when a Cauchy integral is evaluated too close to its support."""

    def __init__(self, distance: float, standoff: float):
        self.distance = distance
        self.standoff = standoff

    def __str__(self):
        return (
            f"Evaluation point at distance {self.distance:.3e} of the support, "
            f"at least {self.standoff:.3e} is required"
        )


def cauchy_transform_disk(
    element: BergmanElement, tol: float = DEFAULT_TOLERANCE
) -> CauchyImage:
    """Closed form transform of an element of the disk space."""
    coefficients = element.series.coefficients
    moments = element.weight.moments
    b = np.array(
        [
            -np.conj(a) * moments.moment(k, tol) if a else 0j
            for k, a in enumerate(coefficients)
        ],
        dtype=complex,
    )
    return CauchyImage(LaurentSeries(b), element.weight)


def cauchy_transform_quadrature(
    element: BergmanElement,
    zeta,
    conformal_map: Optional[ConformalMap] = None,
    rule: Optional[DiskRule] = None,
    standoff: float = STANDOFF,
):
    """Evaluate the transform at points outside the closed domain by quadrature.

    The integrand is conj(g(z)) / (z - zeta) with g = h1(psi) / phi'(psi), evaluated
    directly on the domain.

    Raises
    ------
    StandoffError
        Raised if a point lies closer than `standoff` to the closed domain.

    """
    conformal_map = conformal_map or element.map
    return weighted_cauchy_integral(
        element.series.evaluate,
        element.weight,
        conformal_map,
        zeta,
        rule=rule,
        standoff=standoff,
        degree=element.series.degree,
    )


def cauchy_transform_exterior(
    element: BergmanElement,
    conformal_map: Optional[ConformalMap] = None,
    kmax: int = EXTERIOR_TERMS,
    tol: float = DEFAULT_TOLERANCE,
) -> LaurentSeries:
    """Laurent expansion of the transform at infinity for polynomial maps.

    Expanding 1 / (z - zeta) in powers of z / zeta gives the coefficient of
    zeta**-(k+1) as -sum_j conj(a_j) p_j omega_j where p_j are the Taylor
    coefficients of phi**k phi'. The series converges for |zeta| > max |phi|.

    """
    conformal_map = conformal_map or element.map
    if conformal_map.kind == "moebius_rescale":
        raise ValueError("Exterior expansions require a polynomial or identity map")
    a = element.series.coefficients
    size = a.size
    moments = element.weight.moments
    scaled = np.array(
        [np.conj(c) * moments.moment(j, tol) if c else 0j for j, c in enumerate(a)]
    )
    phi = conformal_map._polynomial()
    dphi = np.polynomial.polynomial.polyder(phi)
    power = np.array([1.0 + 0j])
    b = np.zeros(kmax, dtype=complex)
    for k in range(kmax):
        product = np.polynomial.polynomial.polymul(power, dphi)[:size]
        b[k] = -np.sum(scaled[: product.size] * product)
        power = np.polynomial.polynomial.polymul(power, phi)[:size]
    return LaurentSeries(b)


def weighted_cauchy_integral(
    pullback_values,
    weight: WeightSpec,
    conformal_map: ConformalMap,
    zeta,
    *,
    radial_factor=None,
    breakpoints=(),
    support_radius: float = 1.0,
    rule: Optional[DiskRule] = None,
    standoff: float = STANDOFF,
    degree: int = 0,
):
    """Evaluate (1/pi) integral of conj(g) factor / (z - zeta) over the domain.

    Parameters
    ----------
    pullback_values : Callable
        Evaluates h1 = (g o phi) phi' on the disk.
    weight : WeightSpec
        Weight used when no radial factor is given.
    radial_factor : Callable, optional
        Function of t = 1 - |psi(z)| replacing the weight, it must vanish for
        |psi(z)| > support_radius.
    support_radius : float
        Radius of the disk outside of which the radial factor vanishes.

    """
    zeta = np.asarray(zeta, dtype=complex)
    flat = zeta.ravel()
    distance = np.atleast_1d(distance_to_image(conformal_map, flat, support_radius))
    if np.min(distance) < standoff:
        raise StandoffError(float(np.min(distance)), standoff)

    if radial_factor is None:
        radial_factor, breakpoints = weight.eval, weight.breakpoints

    def integrand(z):
        w = conformal_map.inverse(z) if conformal_map.kind != "identity" else z
        g = pullback_values(w) / conformal_map.derivative(w)
        return np.conj(g)[..., None] / (z[..., None] - flat)

    count = kernel_angular_count(conformal_map, flat, support_radius, degree)
    rule = rule or DiskRule()
    result = integrate_domain(
        integrand,
        conformal_map,
        rule,
        radial_factor=radial_factor,
        breakpoints=breakpoints,
        angular_count=count,
    )
    values = np.asarray(result.value) / np.pi
    return values.reshape(zeta.shape)[()]
