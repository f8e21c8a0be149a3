# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Executable checks that a weighted Cauchy transform is approximated by the
regularized transforms gamma_n.

Three properties are verified: each gamma_n is analytic outside the closure of
G_n, gamma_n converges to the transform uniformly on compacts outside the closure
of G, and the functionals rho(gamma_n o phi) stay bounded by the norm of g.

"""
import logging
import math
from typing import Optional, Sequence

import numpy as np
import xarray as xr

from ..conformal.maps import ConformalMap
from ..conformal.validation import distance_to_image, max_modulus
from ..quadrature.disk import tail_mass
from ..quadrature.integrate import DEFAULT_TOLERANCE
from ..quadrature.rules import DiskRule
from ..reports import CheckReport
from ..series.boundary import DEFAULT_WINDOW, BoundaryFunction, fourier_coeffs, rho
from ..series.taylor import TaylorSeries
from ..transform.cauchy import StandoffError, weighted_cauchy_integral
from ..transform.elements import BergmanElement
from ..transform.norms import bergman_norm_series
from ..weights.conditions import check_integrability
from ..weights.weight import WeightSpec
from .cutoff import ApproximatingDomain, CutoffFamily, cutoff_eval
from .regularized import gamma_n_coeffs, sample_gamma_n_on_boundary

logger = logging.getLogger(__name__)

#: Default indices of the approximating transforms.
DEFAULT_N_LIST = (2, 4, 8, 16, 32, 64)

#: Default number of points on the circles used as compacts.
COMPACT_POINTS = 256

#: Ratio between the default compact radius and the largest modulus on the domain.
COMPACT_RATIO = 1.5

#: Absolute slack of the uniform convergence bound and of the rho bound.
BOUND_SLACK = 1e-9

#: Absolute slack of the per-term domination of the Laurent coefficients.
TERM_SLACK = 1e-12

#: Relative agreement required between sampled and closed form windows.
SAMPLED_TOLERANCE = 1e-6


class MembershipPreconditionError(ValueError):
    """Raised when the weight is not integrable on the domain."""

    def __init__(self, weight: str, conformal_map: str):
        self.weight = weight
        self.map = conformal_map

    def __str__(self):
        return (
            f"The weight {self.weight} is not integrable on the image of {self.map}, "
            "the approximation scheme does not apply"
        )


def rho_bound_check(
    h1: TaylorSeries,
    weight: WeightSpec,
    cutoff: CutoffFamily,
    n_list: Sequence[float] = DEFAULT_N_LIST,
    window: int = DEFAULT_WINDOW,
    tol: float = DEFAULT_TOLERANCE,
) -> CheckReport:
    """Check rho(gamma_n o phi) <= ||g|| and the per-term domination for every n.

    The per-term inequality |b_k^n|**2 / omega_(k-1) <= |a_(k-1)|**2 omega_(k-1)
    implies the bound on rho. The moduli |b_k^n| must also be nondecreasing in n.

    """
    n_values = sorted(float(n) for n in n_list)
    a = h1.coefficients
    moments = np.array([weight.moments.moment(k, tol) for k in range(a.size)])
    g_norm = bergman_norm_series(BergmanElement(h1, weight), tol)
    bounds = np.abs(a) ** 2 * moments

    rows = []
    previous = np.zeros(a.size)
    for n in n_values:
        b = gamma_n_coeffs(h1, weight, cutoff.with_n(n), window, tol).coefficients
        modulus = np.zeros(a.size)
        modulus[: b.size] = np.abs(b)
        excess = float(np.max(modulus**2 / moments - bounds, initial=0.0))
        monotone = bool(np.all(modulus >= previous * (1 - TERM_SLACK)))
        previous = modulus
        rho_n = rho(BoundaryFunction.from_negative(b, window), weight, tol)
        passed = excess <= TERM_SLACK and monotone and rho_n <= g_norm + BOUND_SLACK
        rows.append((rho_n, excess, monotone, passed))

    rho_n, excess, monotone, passed = (
        np.array([row[i] for row in rows]) for i in range(4)
    )
    table = xr.Dataset(
        {
            "rho_n": ("n", rho_n.astype(float)),
            "g_norm": ("n", np.full(len(n_values), g_norm)),
            "max_term_excess": ("n", excess.astype(float)),
            "monotone": ("n", monotone.astype(bool)),
            "pass": ("n", passed.astype(bool)),
        },
        coords={"n": np.array(n_values, dtype=float)},
    )
    all_passed = bool(np.all(passed))
    return CheckReport(
        "rho_bound_check",
        "bounded" if all_passed else "bound-violated",
        all_passed,
        {
            "g_norm": g_norm,
            "sup_rho": float(np.max(rho_n, initial=0.0)),
            "max_term_excess": float(np.max(excess, initial=0.0)),
        },
        table,
    )


def convergence_report(
    h1: TaylorSeries,
    weight: WeightSpec,
    conformal_map: ConformalMap,
    cutoff: CutoffFamily,
    n_list: Sequence[float] = DEFAULT_N_LIST,
    radius: Optional[float] = None,
    points: int = COMPACT_POINTS,
    rule: Optional[DiskRule] = None,
    tol: float = DEFAULT_TOLERANCE,
) -> xr.Dataset:
    """Measure sup |gamma - gamma_n| on the circle |zeta| = radius for every n.

    The deviation gamma - gamma_n is the Cauchy integral of the weight multiplied by
    1 - alpha_n, it is compared with the bound (C_K / pi) ||g|| tail_mass(n)**(1/2)
    where C_K is the inverse of the distance from the circle to the closed domain.

    Parameters
    ----------
    radius : float, optional
        Radius of the compact circle, 1.5 times the largest modulus on the domain
        by default.
    points : int
        Number of equispaced points on the circle.

    Returns
    -------
    xr.Dataset
        Variables tail_mass, sup_dev, bound, rho_n, g_norm and pass on dimension n.

    Raises
    ------
    StandoffError
        Raised if the circle meets the closed domain.

    """
    if radius is None:
        radius = COMPACT_RATIO * max_modulus(conformal_map)
    theta = 2 * np.pi * np.arange(points) / points
    zeta = radius * np.exp(1j * theta)
    distance = float(np.min(distance_to_image(conformal_map, zeta)))
    if distance <= 0:
        raise StandoffError(distance, 0.0)
    c_k = 1.0 / distance
    g_norm = bergman_norm_series(BergmanElement(h1, weight), tol)

    n_values = [float(n) for n in n_list]
    columns = {k: [] for k in ("tail_mass", "sup_dev", "bound", "rho_n")}
    for n in n_values:
        current = cutoff.with_n(n)
        b = gamma_n_coeffs(h1, weight, current, max(h1.degree + 1, 1), tol)
        window = BoundaryFunction.from_negative(b.coefficients)
        columns["rho_n"].append(rho(window, weight, tol))
        if current.is_unit:
            for key in ("tail_mass", "sup_dev", "bound"):
                columns[key].append(0.0)
            continue

        mass = tail_mass(conformal_map, weight, n, rule)
        deviation = _deviation(h1, weight, conformal_map, current, zeta, rule)
        columns["tail_mass"].append(mass)
        columns["sup_dev"].append(float(np.max(np.abs(deviation))))
        columns["bound"].append(c_k / math.pi * g_norm * math.sqrt(mass))
        logger.info(
            "n=%g: sup deviation %.6e, bound %.6e",
            n,
            columns["sup_dev"][-1],
            columns["bound"][-1],
        )

    data = {k: ("n", np.array(v, dtype=float)) for k, v in columns.items()}
    data["g_norm"] = ("n", np.full(len(n_values), g_norm))
    data["pass"] = ("n", data["sup_dev"][1] <= data["bound"][1] + BOUND_SLACK)
    sup_dev = data["sup_dev"][1]
    return xr.Dataset(
        data,
        coords={"n": np.array(n_values, dtype=float)},
        attrs={
            "radius": float(radius),
            "c_k": c_k,
            "weight": weight.spec_string,
            "map": conformal_map.spec_string,
            "cutoff": cutoff.shape,
            "monotone": bool(np.all(np.diff(sup_dev) <= BOUND_SLACK)),
        },
    )


def witness_membership(
    h1: TaylorSeries,
    weight: WeightSpec,
    conformal_map: ConformalMap,
    cutoff: CutoffFamily,
    n_list: Sequence[float] = DEFAULT_N_LIST,
    compacts: Optional[Sequence[float]] = None,
    window: int = DEFAULT_WINDOW,
    rule: Optional[DiskRule] = None,
    tol: float = DEFAULT_TOLERANCE,
) -> CheckReport:
    """Run every check of the approximation scheme and aggregate the verdicts.

    Parameters
    ----------
    compacts : Sequence[float], optional
        Radii of the circles on which the uniform convergence is measured.

    Raises
    ------
    MembershipPreconditionError
        Raised if the weight is not integrable on the domain.

    """
    if math.isinf(check_integrability(weight, conformal_map)):
        raise MembershipPreconditionError(weight.spec_string, conformal_map.spec_string)

    finite = [float(n) for n in n_list if not math.isinf(n)]
    nesting = all(
        ApproximatingDomain(conformal_map, n).check_nesting().passed for n in finite
    )

    if compacts is None:
        compacts = (COMPACT_RATIO * max_modulus(conformal_map),)
    reports = [
        convergence_report(
            h1, weight, conformal_map, cutoff, n_list, radius, rule=rule, tol=tol
        )
        for radius in compacts
    ]
    converges = all(bool(np.all(r["pass"].values)) for r in reports)

    bounded = rho_bound_check(h1, weight, cutoff, n_list, window, tol)

    values = {
        "nesting": nesting,
        "uniform_convergence": converges,
        "rho_bound": bounded.passed,
        "sup_rho": bounded.values["sup_rho"],
        "g_norm": bounded.values["g_norm"],
    }
    sampled = True
    if conformal_map.kind != "identity" and not h1.is_zero:
        error = max(
            (
                _sampled_window_error(h1, weight, conformal_map, cutoff.with_n(n), rule)
                for n in finite
            ),
            default=0.0,
        )
        sampled = error <= SAMPLED_TOLERANCE
        values["sampled_window_error"] = error

    passed = nesting and converges and bounded.passed and sampled
    return CheckReport(
        "witness_membership",
        "pass" if passed else "fail",
        passed,
        values,
        bounded.table,
    )


def _deviation(h1, weight, conformal_map, cutoff, zeta, rule):
    """gamma - gamma_n at the points zeta."""

    def factor(t):
        return weight.eval(t) * (1.0 - cutoff_eval(cutoff, t))

    return weighted_cauchy_integral(
        h1.evaluate,
        weight,
        conformal_map,
        zeta,
        radial_factor=factor,
        breakpoints=cutoff.breakpoints + tuple(weight.breakpoints),
        rule=rule,
        standoff=0.0,
        degree=h1.degree,
    )


def _sampled_window_error(h1, weight, conformal_map, cutoff, rule) -> float:
    """Relative distance between the window recovered from boundary samples of
    gamma_n o phi and the closed form coefficients."""
    size = h1.degree + 1
    count = max(64, 8 * size)
    samples = sample_gamma_n_on_boundary(
        h1, weight, conformal_map, cutoff, count, rule
    )
    window = fourier_coeffs(samples, size)
    expected = gamma_n_coeffs(h1, weight, cutoff, size).coefficients
    recovered = window.negative_part()[: expected.size]
    scale = max(float(np.max(np.abs(expected), initial=0.0)), 1e-300)
    error = float(np.max(np.abs(recovered - expected), initial=0.0)) / scale
    logger.debug("sampled window error for n=%g: %.3e", cutoff.n, error)
    return error
