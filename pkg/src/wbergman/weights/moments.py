# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Moment sequences of a radial weight.

In the variable t = 1 - r the moments read

    omega_k = 2 * int_0^1 (1 - t)**(2k + 1) omega(t) dt
    sigma_k = int_0^1 (1 - t)**(2k + 1) / omega(t) dt

and are computed by the adaptive interval quadrature. The inverse moments are
allowed to diverge, they are then reported as DIVERGENT.

"""
import logging
import math
import threading
from typing import Tuple

import numpy as np
import xarray as xr
from atom.api import Atom, Dict, Float, ForwardTyped, Value

from ..quadrature.integrate import (
    DEFAULT_TOLERANCE,
    QuadratureAccuracyError,
    integrate_01,
)

logger = logging.getLogger(__name__)

#: Marker of an infinite inverse moment.
DIVERGENT = math.inf


def _weight_spec():
    from .weight import WeightSpec

    return WeightSpec


class MomentSequence(Atom):
    """Cache of the moments omega_k and inverse moments sigma_k of a weight.

    Values are computed on first access and reused as long as they were obtained
    with a tolerance at least as tight as the requested one. The cache may be shared
    between threads.

    """

    #: Weight whose moments are stored.
    weight = ForwardTyped(_weight_spec)

    #: Computed moments omega_k.
    values = Dict(int, float)

    #: Computed inverse moments sigma_k, DIVERGENT when infinite.
    inverse_values = Dict(int, float)

    #: Tolerance used when none is specified.
    quadrature_tolerance = Float(DEFAULT_TOLERANCE)

    def moment(self, k: int, tol: float = 0.0) -> float:
        """Return omega_k, computing it if necessary.

        Raises
        ------
        QuadratureAccuracyError
            Raised if the moment diverges, which means the weight is not integrable.

        """
        _check_index(k)
        tol = tol or self.quadrature_tolerance
        return self._cached("omega", int(k), tol)

    def inverse_moment(self, k: int, tol: float = 0.0) -> float:
        """Return sigma_k, or DIVERGENT if the integral diverges."""
        _check_index(k)
        tol = tol or self.quadrature_tolerance
        return self._cached("sigma", int(k), tol)

    def muckenhoupt_ratio(self, k: int, tol: float = 0.0) -> float:
        """Return (k + 1)**2 * (omega_k / 2) * sigma_k."""
        sigma = self.inverse_moment(k, tol)
        if sigma == DIVERGENT:
            return DIVERGENT
        return (k + 1) ** 2 * 0.5 * self.moment(k, tol) * sigma

    def table(self, k_max: int, tol: float = 0.0) -> xr.Dataset:
        """Tabulate omega_k, sigma_k and the Muckenhoupt ratio for k <= k_max."""
        _check_index(k_max)
        k = np.arange(k_max + 1)
        omega = np.array([self.moment(i, tol) for i in k])
        sigma = np.array([self.inverse_moment(i, tol) for i in k])
        with np.errstate(invalid="ignore"):
            ratio = (k + 1) ** 2 * 0.5 * omega * sigma
        return xr.Dataset(
            {
                "omega": ("k", omega),
                "sigma": ("k", sigma),
                "M": ("k", ratio),
            },
            coords={"k": k},
            attrs={"weight": self.weight.spec_string},
        )

    def clear(self) -> None:
        """Drop every cached value."""
        with self._lock:
            self.values = {}
            self.inverse_values = {}
            self._tolerances = {}

    # --- Private API ------------------------------------------------------------------

    #: Lock protecting the caches.
    _lock = Value(factory=threading.RLock)

    #: Tolerance with which each cached value was obtained, keyed by (kind, k).
    _tolerances = Dict()

    def _cached(self, kind: str, k: int, tol: float) -> float:
        key: Tuple[str, int] = (kind, k)
        if kind == "omega":
            store, compute = self.values, self._compute_moment
        else:
            store, compute = self.inverse_values, self._compute_inverse_moment
        with self._lock:
            if k in store and self._tolerances.get(key, math.inf) <= tol:
                return store[k]
            value = compute(k, tol)
            store[k] = value
            self._tolerances[key] = tol
            return value

    def _compute_moment(self, k: int, tol: float) -> float:
        weight = self.weight
        exponent = 2 * k + 1

        def integrand(t):
            return 2.0 * np.exp(exponent * np.log1p(-t)) * weight.eval(t)

        result = integrate_01(integrand, tol, breakpoints=weight.breakpoints)
        if result.divergent:
            raise QuadratureAccuracyError(
                result.value,
                result.error,
                f"moment {k} of {weight.spec_string} diverges",
            )
        logger.debug("omega_%d of %s = %.16e", k, weight.spec_string, result.value)
        return float(result.value)

    def _compute_inverse_moment(self, k: int, tol: float) -> float:
        weight = self.weight
        exponent = 2 * k + 1

        def integrand(t):
            return np.exp(exponent * np.log1p(-t) - weight.log_eval(t))

        result = integrate_01(integrand, tol, breakpoints=weight.breakpoints)
        if result.divergent:
            logger.debug("sigma_%d of %s diverges", k, weight.spec_string)
            return DIVERGENT
        return float(result.value)


def moment(weight, k: int, tol: float = DEFAULT_TOLERANCE) -> float:
    """Return the moment omega_k of a weight."""
    return weight.moments.moment(k, tol)


def inverse_moment(weight, k: int, tol: float = DEFAULT_TOLERANCE) -> float:
    """Return the inverse moment sigma_k of a weight, or DIVERGENT."""
    return weight.moments.inverse_moment(k, tol)


def muckenhoupt_ratio(weight, k: int, tol: float = DEFAULT_TOLERANCE) -> float:
    """Return (k + 1)**2 * (omega_k / 2) * sigma_k."""
    return weight.moments.muckenhoupt_ratio(k, tol)


def _check_index(k: int) -> None:
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ValueError(f"Moment indices are non-negative integers, got {k!r}")
