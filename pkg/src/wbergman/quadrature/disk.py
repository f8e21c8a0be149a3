# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Integration over the unit disk, its exterior and conformal images of the disk.

Integrals are computed in polar coordinates. The angular integral uses equispaced
angles, which converges geometrically for integrands analytic in the angle, the
radial one is done either adaptively in t = 1 - r or with a fixed RadialRule.

Integrands receive an array of points of shape (n_radii, n_angles) and return an
array with the same leading shape, possibly followed by trailing axes which are
integrated component-wise.

"""
import logging
import math
from typing import Callable, Iterable, Optional

import numpy as np

from ..conformal.maps import ConformalMap
from ..conformal.validation import distance_to_image
from .integrate import QuadratureAccuracyError, QuadratureResult, integrate_01
from .rules import MAX_ANGULAR_COUNT, DiskRule

logger = logging.getLogger(__name__)

#: Size of the neglected angular aliasing terms.
ANGULAR_TOLERANCE = 1e-15

RadialFactor = Callable[[np.ndarray], np.ndarray]


def integrate_disk(
    integrand: Callable[[np.ndarray], np.ndarray],
    rule: Optional[DiskRule] = None,
    *,
    radial_factor: Optional[RadialFactor] = None,
    breakpoints: Iterable[float] = (),
    angular_count: int = 0,
) -> QuadratureResult:
    """Integrate F(w) * factor(1 - |w|) over the unit disk.

    Parameters
    ----------
    integrand : Callable[[np.ndarray], np.ndarray]
        Vectorized function F of the point w.
    rule : DiskRule, optional
        Rule to use, an adaptive DiskRule() by default.
    radial_factor : Callable[[np.ndarray], np.ndarray], optional
        Function of t = 1 - |w| multiplying the integrand, typically a weight. Radii
        at which it vanishes are not evaluated.
    breakpoints : Iterable[float]
        Values of t at which the radial integrand is not smooth.
    angular_count : int
        Minimal number of angles, the rule count is used if it is larger.

    """
    rule = rule or DiskRule()
    angles = rule.angles(angular_count)
    unit = np.exp(1j * angles)

    if not rule.adaptive and radial_factor is None:
        radial = rule.radial
        points = radial.nodes[:, None] * unit[None, :]
        means = 2 * np.pi * np.mean(_evaluate(integrand, points), axis=1)
        value = np.tensordot(radial.weights * radial.nodes, means, axes=(0, 0))
        return QuadratureResult(value=np.asarray(value)[()], evaluations=points.size)

    shape = []

    def radial(t: np.ndarray) -> np.ndarray:
        r = 1.0 - t
        if radial_factor is None:
            factor = np.ones_like(t)
        else:
            factor = np.broadcast_to(np.asarray(radial_factor(t), dtype=float), t.shape)
        active = factor != 0
        if not shape:
            shape.append(_evaluate(integrand, 0.5 * unit[None, :]).shape[2:])
        values = np.zeros(t.shape + shape[0], dtype=complex)
        if active.any():
            points = r[active, None] * unit[None, :]
            means = 2 * np.pi * np.mean(_evaluate(integrand, points), axis=1)
            scale = (r * factor)[active]
            values[active] = means * scale.reshape(scale.shape + (1,) * len(shape[0]))
        return values

    return integrate_01(radial, rule.tol, breakpoints=breakpoints)


def integrate_exterior(
    integrand: Callable[[np.ndarray], np.ndarray],
    rule: Optional[DiskRule] = None,
    *,
    radial_factor: Optional[RadialFactor] = None,
    angular_count: int = 0,
) -> QuadratureResult:
    """Integrate F(zeta) * factor(1 - 1 / |zeta|) over |zeta| > 1.

    The substitution zeta = 1 / w maps the exterior onto the punctured disk with
    Jacobian |w|**-4, the factor is then a function of t = 1 - |w|.

    Raises
    ------
    QuadratureAccuracyError
        Raised if the integrand does not decay fast enough at infinity.

    """
    rule = (rule or DiskRule()).evolve(adaptive=True)

    def pulled(w: np.ndarray) -> np.ndarray:
        values = np.asarray(integrand(1.0 / w))
        jacobian = np.abs(w) ** -4.0
        return values * jacobian.reshape(jacobian.shape + (1,) * (values.ndim - 2))

    result = integrate_disk(
        pulled, rule, radial_factor=radial_factor, angular_count=angular_count
    )
    if result.divergent and result.divergent_side == "right":
        raise QuadratureAccuracyError(
            result.value, result.error, "the integrand does not decay at infinity"
        )
    return result


def integrate_domain(
    integrand: Callable[[np.ndarray], np.ndarray],
    conformal_map: ConformalMap,
    rule: Optional[DiskRule] = None,
    *,
    radial_factor: Optional[RadialFactor] = None,
    breakpoints: Iterable[float] = (),
    angular_count: int = 0,
) -> QuadratureResult:
    """Integrate H(z) * factor(1 - |psi(z)|) over G = phi(unit disk).

    The integral is pulled back to the disk where it reads
    H(phi(w)) |phi'(w)|**2 factor(1 - |w|).

    """
    rule = rule or DiskRule()

    def pulled(w: np.ndarray) -> np.ndarray:
        values = np.asarray(integrand(conformal_map.forward(w)))
        if values.ndim < 2:
            values = np.broadcast_to(values, w.shape)
        jacobian = np.abs(conformal_map.derivative(w)) ** 2
        return values * jacobian.reshape(jacobian.shape + (1,) * (values.ndim - 2))

    count = max(angular_count, conformal_map.angular_count())
    return integrate_disk(
        pulled,
        rule,
        radial_factor=radial_factor,
        breakpoints=breakpoints,
        angular_count=count,
    )


def tail_mass(
    conformal_map: ConformalMap, weight, n: float, rule: Optional[DiskRule] = None
) -> float:
    """Weighted area of the boundary layer {1 - 2/n < |psi(z)| < 1} of the domain.

    Returns 0 for n = math.inf and math.inf if the weight is not integrable.

    """
    if math.isinf(n):
        return 0.0
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    edge = 2.0 / n

    def factor(t):
        return np.where(t <= edge, weight.eval(t), 0.0)

    result = integrate_domain(
        lambda z: np.ones(np.shape(z)),
        conformal_map,
        rule,
        radial_factor=factor,
        breakpoints=(edge,) + tuple(weight.breakpoints),
    )
    if result.divergent:
        return math.inf
    return float(np.real(result.value))


def kernel_angular_count(
    conformal_map: ConformalMap,
    zeta,
    support_radius: float = 1.0,
    degree: int = 0,
    minimum: int = 0,
) -> int:
    """Number of angles resolving a Cauchy kernel 1 / (phi(w) - zeta).

    The kernel is analytic in the angle in an annulus whose width is set by the
    distance from the points to the image of the disk of radius support_radius,
    the aliasing error therefore decays like ratio**count.

    """
    zeta = np.atleast_1d(np.asarray(zeta, dtype=complex))
    distance = float(np.min(distance_to_image(conformal_map, zeta, support_radius)))
    if distance <= 0:
        return MAX_ANGULAR_COUNT
    unit = np.exp(2j * np.pi * np.arange(256) / 256)
    lipschitz = float(np.max(np.abs(conformal_map.derivative(support_radius * unit))))
    ratio = support_radius / (support_radius + distance / max(lipschitz, 1e-300))
    count = math.ceil(math.log(ANGULAR_TOLERANCE) / math.log(ratio)) if ratio > 0 else 0
    count += 2 * (degree + conformal_map.degree) + 8
    count = max(count, minimum, conformal_map.angular_count())
    if count > MAX_ANGULAR_COUNT:
        logger.warning(
            "Capping the number of angles at %d (%d requested)",
            MAX_ANGULAR_COUNT,
            count,
        )
        count = MAX_ANGULAR_COUNT
    return count + count % 2


def _evaluate(integrand, points: np.ndarray) -> np.ndarray:
    values = np.asarray(integrand(points))
    if values.shape[:2] != points.shape:
        values = np.broadcast_to(values, points.shape + values.shape[2:])
    return values
