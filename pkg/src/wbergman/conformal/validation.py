# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Numerical checks and geometric quantities of conformal maps.

"""
import logging

import numpy as np
from numpy.polynomial import polynomial as P

from ..reports import CheckReport
from .maps import ConformalMap

logger = logging.getLogger(__name__)

#: Smallest boundary sampling accepted by the univalence check.
MIN_GRID = 256

#: |phi'| below this value on the sampling grid counts as a critical point.
DERIVATIVE_FLOOR = 1e-8

#: Default number of samples used to describe image curves.
CURVE_SAMPLES = 2048


class NotUnivalentError(ValueError):
    """Raised when a map fails the univalence check."""

    def __init__(self, report: CheckReport):
        self.report = report

    def __str__(self):
        values = self.report.values
        return (
            f"The map {values.get('map')} is not univalent on the closed disk "
            f"({self.report.verdict}), witness: {values.get('witness')}"
        )


def check_univalent(conformal_map: ConformalMap, grid: int = MIN_GRID) -> CheckReport:
    """Check numerically that a map is univalent on the closed unit disk.

    The check combines the argument principle applied to phi' on the unit circle, a
    lower bound of |phi'| on a polar grid, the absence of self intersection of the
    sampled boundary curve and its winding number around phi(0).

    """
    if grid < MIN_GRID:
        raise ValueError(f"The grid must hold at least {MIN_GRID} points, got {grid}")
    unit = np.exp(2j * np.pi * np.arange(grid) / grid)

    critical_points = int(round(winding_number(conformal_map.derivative(unit))))
    radii = np.linspace(0.0, 1.0, grid // 8 + 1)
    disk = (radii[:, None] * unit[None, :]).ravel()
    modulus = np.abs(conformal_map.derivative(disk))
    lowest = int(np.argmin(modulus))

    boundary = conformal_map.forward(unit)
    crossings = self_intersections(boundary)
    turns = int(round(winding_number(boundary - conformal_map.forward(0.0))))

    witness = None
    if critical_points or modulus[lowest] <= DERIVATIVE_FLOOR:
        witness = complex(disk[lowest])
        if conformal_map.kind == "polynomial":
            roots = P.polyroots(P.polyder(conformal_map._polynomial()))
            inside = roots[np.abs(roots) <= 1.0 + 1e-12]
            if inside.size:
                witness = complex(inside[np.argmin(np.abs(inside))])
        verdict = "critical-point"
    elif crossings:
        i, j = crossings[0]
        witness = [float(2 * np.pi * i / grid), float(2 * np.pi * j / grid)]
        verdict = "self-intersection"
    elif turns != 1:
        verdict = "winding"
    else:
        verdict = "univalent"

    if verdict != "univalent":
        logger.info("%s is not univalent: %s", conformal_map.spec_string, verdict)
    return CheckReport(
        "check_univalent",
        verdict,
        verdict == "univalent",
        {
            "map": conformal_map.spec_string,
            "critical_points": critical_points,
            "min_derivative": float(modulus[lowest]),
            "crossings": len(crossings),
            "winding": turns,
            "witness": witness,
        },
    )


def validate_map(conformal_map: ConformalMap, grid: int = MIN_GRID) -> ConformalMap:
    """Return the map if it is univalent, raise NotUnivalentError otherwise."""
    report = check_univalent(conformal_map, grid)
    if not report.passed:
        raise NotUnivalentError(report)
    return conformal_map


def winding_number(values: np.ndarray):
    """Winding number about 0 of the closed polylines along the last axis."""
    closed = np.asarray(values, dtype=complex)
    turns = np.angle(np.roll(closed, -1, axis=-1) / closed)
    return np.sum(turns, axis=-1) / (2 * np.pi)


def self_intersections(curve: np.ndarray) -> list:
    """Pairs (i, j) of non adjacent segments of a closed polyline that intersect."""
    start = np.asarray(curve, dtype=complex)
    count = start.size
    direction = np.roll(start, -1) - start

    def cross(u, v):
        return np.imag(np.conj(u) * v)

    p, q = start[:, None], start[None, :]
    dp, dq = direction[:, None], direction[None, :]
    o1 = cross(dp, q - p)
    o2 = cross(dp, q + dq - p)
    o3 = cross(dq, p - q)
    o4 = cross(dq, p + dp - q)
    hit = (o1 * o2 < 0) & (o3 * o4 < 0)

    i, j = np.nonzero(np.triu(hit, k=2))
    keep = ~((i == 0) & (j == count - 1))
    return list(zip(i[keep].tolist(), j[keep].tolist()))


def boundary_area(conformal_map: ConformalMap, count: int = CURVE_SAMPLES) -> float:
    """Area enclosed by the boundary curve, from the trapezoidal rule."""
    theta = 2 * np.pi * np.arange(count) / count
    z = conformal_map.boundary_point(theta)
    dz = conformal_map.boundary_tangent(theta)
    return float(np.imag(np.sum(np.conj(z) * dz)) * np.pi / count)


def max_modulus(
    conformal_map: ConformalMap, radius: float = 1.0, count: int = CURVE_SAMPLES
) -> float:
    """Maximum of |phi| on the closed disk of the given radius."""
    unit = np.exp(2j * np.pi * np.arange(count) / count)
    return float(np.max(np.abs(conformal_map.forward(radius * unit))))


def distance_to_image(
    conformal_map: ConformalMap, zeta, radius: float = 1.0, count: int = CURVE_SAMPLES
):
    """Signed distance from points to phi(|w| <= radius), negative inside.

    The image curve is sampled at count points, which overestimates distances by at
    most half the largest sampling gap.

    """
    zeta = np.asarray(zeta, dtype=complex)
    if conformal_map.kind == "identity" or (
        conformal_map.kind == "moebius_rescale" and conformal_map.a == 0
    ):
        return (np.abs(zeta) - abs(conformal_map.lam) * radius)[()]

    unit = np.exp(2j * np.pi * np.arange(count) / count)
    curve = conformal_map.forward(radius * unit)
    offsets = curve[None, :] - zeta.ravel()[:, None]
    distance = np.min(np.abs(offsets), axis=1)
    inside = np.abs(np.asarray(winding_number(offsets))) > 0.5
    return np.where(inside, -distance, distance).reshape(zeta.shape)[()]
