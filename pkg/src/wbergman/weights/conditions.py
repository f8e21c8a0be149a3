# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Numerical diagnostics of the conditions a weight may satisfy.

None of these checks proves anything: they classify finite numerical evidence.

"""
import logging
import math
from typing import Optional, Sequence

import numpy as np
import xarray as xr

from ..conformal.maps import ConformalMap
from ..quadrature.disk import integrate_domain
from ..quadrature.integrate import DEFAULT_TOLERANCE, gauss_legendre
from ..quadrature.rules import DiskRule
from ..reports import CheckReport
from .moments import DIVERGENT
from .weight import WeightSpec

logger = logging.getLogger(__name__)

#: Relative growth of the running maximum below which a ratio sequence is deemed
#: bounded.
BOUNDED_GROWTH = 0.01

#: Slack, in units of the quadrature tolerance, of the lower Muckenhoupt bound.
LOWER_BOUND_SLACK = 10.0

#: Fraction of the peak growth density below which the log-log integral is
#: classified as convergent.
CONVERGENT_DENSITY = 0.1

#: Number of dyadic sample points used by default by the log-log diagnostic.
VOLBERG_LEVELS = 30


def check_condition_41(
    weight: WeightSpec, k_max: int = 200, tol: float = DEFAULT_TOLERANCE
) -> CheckReport:
    """Test whether the Muckenhoupt ratios M_k stay bounded for k <= k_max.

    Verdicts are "divergent" when one inverse moment is infinite,
    "bounded-observed" when the running maximum of M_k stalled over the last
    tenth of the indices and "inconclusive" otherwise.

    """
    if k_max < 1:
        raise ValueError(f"k_max must be at least 1, got {k_max}")
    table = weight.moments.table(k_max, tol)
    ratios = table["M"].values
    if np.isinf(ratios).any():
        first = int(np.argmax(np.isinf(ratios)))
        return CheckReport(
            "check_condition_41",
            "divergent",
            False,
            {"sup": DIVERGENT, "first_divergent_index": first},
            table,
        )

    running = np.maximum.accumulate(ratios)
    window = min(max(10, k_max // 10), k_max)
    growth = running[-1] - running[-1 - window]
    stable = growth <= BOUNDED_GROWTH * running[-1]
    verdict = "bounded-observed" if stable else "inconclusive"
    logger.info("condition 4.1 for %s: %s", weight.spec_string, verdict)
    return CheckReport(
        "check_condition_41",
        verdict,
        verdict == "bounded-observed",
        {"sup": float(running[-1]), "argmax": int(np.argmax(ratios)), "window": window},
        table,
    )


def check_condition_42(
    weight: WeightSpec, k_max: int = 200, tol: float = DEFAULT_TOLERANCE
) -> CheckReport:
    """Check the lower bound M_k >= 1/4 implied by the Cauchy-Schwarz inequality.

    A violation beyond the quadrature slack reveals a numerical inconsistency. The
    check does not apply when an inverse moment diverges.

    """
    if k_max < 0:
        raise ValueError(f"k_max must be non-negative, got {k_max}")
    table = weight.moments.table(k_max, tol)
    ratios = table["M"].values
    if np.isinf(ratios).any():
        return CheckReport(
            "check_condition_42", "not-applicable", True, {"min": DIVERGENT}, table
        )
    epsilon = LOWER_BOUND_SLACK * tol
    index = int(np.argmin(ratios))
    minimum = float(ratios[index])
    passed = minimum >= 0.25 - epsilon
    if not passed:
        logger.warning(
            "M_%d = %.12g violates the lower bound 1/4 for %s",
            index,
            minimum,
            weight.spec_string,
        )
    return CheckReport(
        "check_condition_42",
        "pass" if passed else "numerical-inconsistency",
        passed,
        {"min": minimum, "argmin": index, "epsilon": epsilon},
        table,
    )


def check_volberg(
    weight: WeightSpec, samples: Optional[Sequence[float]] = None
) -> CheckReport:
    """Diagnose the log-log integrability condition on a decreasing sequence of t.

    The checks are, by order of precedence: the definition of log log(1/omega) at
    every sample ("undefined"), the monotonicity of t log(1/omega)
    ("fails-monotonicity") and the growth of the partial integrals of log log(1/omega)
    ("integral-appears-convergent" versus "consistent-with-condition").

    """
    if samples is None:
        samples = 0.5 ** np.arange(1, VOLBERG_LEVELS + 1)
    t = np.asarray(samples, dtype=float)
    if t.ndim != 1 or t.size < 3:
        raise ValueError("At least three sample points are required")
    if not (np.all(np.diff(t) < 0) and t[0] <= 1.0 and t[-1] > 0.0):
        raise ValueError("Samples must be strictly decreasing in (0, 1]")

    loglog = np.asarray(weight.log_log_inverse(t), dtype=float)
    defined = np.isfinite(loglog)
    with np.errstate(over="ignore"):
        # log(t log(1/omega)) stays finite when t log(1/omega) overflows
        log_growth = np.log(t) + loglog
        growth = np.exp(log_growth)

    table = xr.Dataset(
        {
            "loglog_inverse": ("t", loglog),
            "defined": ("t", defined),
            "t_log_inverse": ("t", growth),
        },
        coords={"t": t},
    )
    if not defined.all():
        return CheckReport(
            "check_volberg",
            "undefined",
            False,
            {"undefined_points": t[~defined].tolist()},
            table,
        )

    monotonic = bool(np.all(np.diff(log_growth) > 0))
    if not monotonic:
        return CheckReport(
            "check_volberg",
            "fails-monotonicity",
            False,
            {"monotonic": False, "last_growth": float(growth[-1])},
            table,
        )

    pieces = np.array(
        [
            gauss_legendre(weight.log_log_inverse, lo, hi)
            for hi, lo in zip(t[:-1], t[1:])
        ]
    )
    density = pieces / np.log(t[:-1] / t[1:])
    partial = np.cumsum(pieces)
    table["partial_integral"] = ("t", np.concatenate([[0.0], partial]))
    peak = float(np.max(density))
    convergent = peak > 0 and density[-1] < CONVERGENT_DENSITY * peak
    if convergent:
        verdict = "integral-appears-convergent"
    else:
        verdict = "consistent-with-condition"
    return CheckReport(
        "check_volberg",
        verdict,
        not convergent,
        {
            "monotonic": True,
            "last_growth": float(growth[-1]),
            "partial_integral": float(partial[-1]),
            "last_density": float(density[-1]),
        },
        table,
    )


def check_integrability(
    weight: WeightSpec,
    conformal_map: Optional[ConformalMap] = None,
    tol: float = 1e-8,
) -> float:
    """Return the weighted area of the domain, math.inf if it is infinite."""
    conformal_map = conformal_map or ConformalMap.identity()
    result = integrate_domain(
        lambda z: np.ones(np.shape(z)),
        conformal_map,
        DiskRule(tol=tol),
        radial_factor=weight.eval,
        breakpoints=weight.breakpoints,
    )
    if result.divergent:
        logger.info("%s is not integrable on the domain", weight.spec_string)
        return math.inf
    return float(np.real(result.value))
