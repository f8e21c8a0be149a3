# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Adaptive integration on the open unit interval.

The interior of (0, 1) is covered by a dyadic grid of panels, each integrated by
Gauss-Legendre bisection. The neighbourhood of each endpoint is resolved by nested
dyadic pieces, [s/2, s], [s/4, s/2], ... whose contributions are summed and closed
by a geometric tail extrapolation. The ratios of consecutive pieces also decide
whether an improper integral diverges.

Integrands are vectorized: they receive a 1D array of abscissae and return an array
whose first axis matches it. Trailing axes are allowed and are integrated
component-wise, error control using the max norm.

"""
import logging
import math
from typing import Callable, Iterable, List, Tuple

import numpy as np
from atom.api import Atom, Bool, Enum, Float, Int, Value

logger = logging.getLogger(__name__)

#: Default relative tolerance of one dimensional integrals.
DEFAULT_TOLERANCE = 1e-10

#: Absolute floor of every error test.
ABSOLUTE_FLOOR = 1e-300

#: Partial integrals larger than this are classified as divergent.
DIVERGENCE_CEILING = 1e12

#: Ratio of consecutive endpoint pieces from which the pieces no longer decay.
GROWTH_RATIO = 1.0 - 1e-9

#: Number of consecutive stable growing refinements marking a divergence.
GROWTH_RUNS = 4

#: Fraction of the tolerance successive endpoint extrapolations must agree to.
EXTRAPOLATION_FRACTION = 1e-4

#: Number of Gauss-Legendre nodes per panel.
GAUSS_ORDER = 16

#: The interior grid covers [2**-BASE_LEVEL, 1 - 2**-BASE_LEVEL] at least.
BASE_LEVEL = 2

#: Maximal number of nested pieces used to resolve one endpoint.
MAX_LEVELS = 1000

#: Maximal bisection depth inside one panel.
MAX_BISECTIONS = 48

#: Relative size of floating point noise accepted as converged.
ROUNDOFF = 64 * np.finfo(float).eps

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(GAUSS_ORDER)

_UNIT_NODES = 0.5 * (_NODES + 1.0)

_UNIT_WEIGHTS = 0.5 * _WEIGHTS

# Whole panel followed by its two halves, evaluated in a single call.
_SPLIT_NODES = np.concatenate(
    [_UNIT_NODES, 0.5 * _UNIT_NODES, 0.5 + 0.5 * _UNIT_NODES]
)


class QuadratureAccuracyError(ArithmeticError):
    """Raised when an integral cannot be resolved within the allowed budget.

    The last estimate and its error bound are kept so that callers can report the
    bracket the integral is known to lie in.

    """

    def __init__(self, estimate, error: float, reason: str):
        self.estimate = estimate
        self.error = error
        self.reason = reason

    @property
    def bracket(self) -> Tuple[float, float]:
        """Interval containing the magnitude of the integral."""
        magnitude = _norm(self.estimate)
        if not (math.isfinite(magnitude) and math.isfinite(self.error)):
            return (0.0, math.inf)
        return (max(magnitude - self.error, 0.0), magnitude + self.error)

    def __str__(self):
        low, high = self.bracket
        return (
            f"Quadrature did not converge ({self.reason}): the integral magnitude "
            f"lies in [{low:.6e}, {high:.6e}]"
        )


class QuadratureResult(Atom):
    """Value of an integral together with its error estimate."""

    #: Value of the integral (float, complex or array for vector integrands).
    value = Value()

    #: Estimated absolute error, in max norm for vector integrands.
    error = Float()

    #: Whether the integral was classified as divergent.
    divergent = Bool()

    #: Endpoint at which the divergence was detected.
    divergent_side = Enum("", "left", "right")

    #: Number of integrand evaluations (abscissae) used.
    evaluations = Int()

    def __init__(
        self,
        value,
        error: float = 0.0,
        divergent: bool = False,
        divergent_side: str = "",
        evaluations: int = 0,
    ):
        super().__init__(
            value=value,
            error=error,
            divergent=divergent,
            divergent_side=divergent_side,
            evaluations=evaluations,
        )
        self.freeze()


def integrate_01(
    f: Callable[[np.ndarray], np.ndarray],
    tol: float = DEFAULT_TOLERANCE,
    *,
    breakpoints: Iterable[float] = (),
) -> QuadratureResult:
    """Integrate a vectorized function over (0, 1).

    Parameters
    ----------
    f : Callable[[np.ndarray], np.ndarray]
        Integrand, never evaluated at 0 or 1.
    tol : float
        Relative tolerance of the result.
    breakpoints : Iterable[float]
        Points of (0, 1) at which f is not smooth. Panels are split there, and the
        endpoint refinement starts below the smallest and above the largest of them,
        so an integrand vanishing near an endpoint must mark where it starts to
        vanish.

    Returns
    -------
    QuadratureResult
        Value and error estimate. Divergent integrals have an infinite value and
        `divergent` set.

    Raises
    ------
    QuadratureAccuracyError
        Raised if the bisection or endpoint budget is exhausted.

    """
    if not tol > 0:
        raise ValueError(f"The tolerance must be positive, got {tol}")

    points = sorted({float(p) for p in breakpoints if 0.0 < p < 1.0})
    left = min([0.5**BASE_LEVEL] + points)
    right = max([1.0 - 0.5**BASE_LEVEL] + points)
    edges = _interior_edges(left, right)

    integrator = _PanelIntegrator(f, tol, np.array(points))
    with np.errstate(all="ignore"):
        try:
            coarse = sum(integrator.gauss(a, b) for a, b in zip(edges, edges[1:]))
            integrator.scale = 1e-3 * _norm(coarse)
            interior = sum(integrator.panel(a, b) for a, b in zip(edges, edges[1:]))
            lower, diverged = integrator.endpoint(left, "left", interior)
            if diverged:
                return integrator.divergence("left")
            upper, diverged = integrator.endpoint(right, "right", interior + lower)
            if diverged:
                return integrator.divergence("right")
        except _NonFinite as e:
            return integrator.divergence("left" if e.position < 0.5 else "right")

    value = interior + lower + upper
    if np.ndim(value) == 0:
        value = np.asarray(value).item()
    logger.debug(
        "integrate_01: %d evaluations, error %.3e",
        integrator.evaluations,
        integrator.error,
    )
    return QuadratureResult(
        value=value, error=integrator.error, evaluations=integrator.evaluations
    )


def gauss_legendre(
    f: Callable[[np.ndarray], np.ndarray], a: float, b: float, order: int = GAUSS_ORDER
):
    """Single Gauss-Legendre panel on [a, b]."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    half = 0.5 * (b - a)
    values = np.asarray(f(a + half * (nodes + 1.0)))
    return np.tensordot(half * weights, values, axes=(0, 0))


# --- Private API ----------------------------------------------------------------------


class _NonFinite(Exception):
    """Signal a non finite integrand value."""

    def __init__(self, position: float):
        self.position = position


def _norm(value) -> float:
    return float(np.max(np.abs(value))) if np.size(value) else 0.0


def _interior_edges(left: float, right: float) -> List[float]:
    """Dyadic grid of [left, right] graded toward both ends."""
    edges = {left, right, 0.5}
    x = 0.5
    while x > left:
        edges.add(x)
        x *= 0.5
    gap = 0.5
    while 1.0 - gap < right:
        edges.add(1.0 - gap)
        gap *= 0.5
    return sorted(e for e in edges if left <= e <= right)


class _PanelIntegrator:
    """State of one call to integrate_01."""

    def __init__(self, f, tol: float, breakpoints: np.ndarray):
        self.f = f
        self.tol = tol
        self.breakpoints = breakpoints
        self.scale = 0.0
        self.error = 0.0
        self.evaluations = 0

    def evaluate(self, t: np.ndarray) -> np.ndarray:
        values = np.asarray(self.f(t))
        if values.ndim == 0:
            values = np.full(t.shape, values)
        self.evaluations += t.size
        if not np.all(np.isfinite(values)):
            raise _NonFinite(float(np.mean(t)) if t.size else 0.5)
        return values

    def gauss(self, a: float, b: float):
        values = self.evaluate(a + (b - a) * _UNIT_NODES)
        return np.tensordot((b - a) * _UNIT_WEIGHTS, values, axes=(0, 0))

    def panel(self, a: float, b: float):
        """Integrate over [a, b], splitting at the breakpoints inside."""
        inner = self.breakpoints[(self.breakpoints > a) & (self.breakpoints < b)]
        edges = [a, *inner, b]
        return sum(self.adaptive(lo, hi) for lo, hi in zip(edges, edges[1:]))

    def adaptive(self, a: float, b: float):
        total = 0.0
        stack = [(a, b, 0)]
        n = GAUSS_ORDER
        while stack:
            lo, hi, depth = stack.pop()
            width = hi - lo
            values = self.evaluate(lo + width * _SPLIT_NODES)
            weights = width * _UNIT_WEIGHTS
            coarse = np.tensordot(weights, values[:n], axes=(0, 0))
            fine = np.tensordot(0.5 * weights, values[n : 2 * n], axes=(0, 0))
            fine = fine + np.tensordot(0.5 * weights, values[2 * n :], axes=(0, 0))
            halves = np.abs(values[n:]).reshape((2, n) + values.shape[1:])
            absolute = np.tensordot(0.5 * weights, halves.sum(axis=0), axes=(0, 0))
            difference = _norm(fine - coarse)
            allowed = max(
                self.tol * max(_norm(fine), self.scale),
                ROUNDOFF * _norm(absolute),
                ABSOLUTE_FLOOR,
            )
            if difference <= allowed:
                total = total + fine
                self.error += difference
                continue
            if depth >= MAX_BISECTIONS:
                raise QuadratureAccuracyError(
                    total + fine, self.error + difference, f"bisection of [{a}, {b}]"
                )
            middle = lo + 0.5 * width
            stack.append((lo, middle, depth + 1))
            stack.append((middle, hi, depth + 1))
        return total

    def endpoint(self, start: float, side: str, interior) -> Tuple[object, bool]:
        """Resolve the neighbourhood of one endpoint by nested dyadic pieces.

        Returns the contribution of the neighbourhood and whether it diverges.

        """
        accumulated = 0.0
        previous_size = previous_ratio = previous_extrapolation = None
        growing = 0
        for level in range(MAX_LEVELS):
            if side == "left":
                a, b = start * 0.5 ** (level + 1), start * 0.5**level
            else:
                gap = (1.0 - start) * 0.5**level
                a, b = 1.0 - gap, 1.0 - 0.5 * gap
            piece = self.panel(a, b)
            accumulated = accumulated + piece
            if _norm(accumulated + interior) > DIVERGENCE_CEILING:
                logger.debug("integrate_01: %s partial integral above ceiling", side)
                return accumulated, True

            size = _norm(piece)
            if previous_size is not None:
                if previous_size > ABSOLUTE_FLOOR:
                    ratio = size / previous_size
                else:
                    ratio = 0.0 if size <= ABSOLUTE_FLOOR else math.inf

                if (
                    ratio >= GROWTH_RATIO
                    and previous_ratio is not None
                    and abs(ratio - previous_ratio) <= 0.01 * ratio
                ):
                    growing += 1
                    if growing >= GROWTH_RUNS:
                        logger.debug(
                            "integrate_01: %s endpoint diverges (piece ratio %.4f)",
                            side,
                            ratio,
                        )
                        return accumulated, True
                else:
                    growing = 0

                if ratio < 1.0:
                    extrapolation = accumulated + piece * (ratio / (1.0 - ratio))
                    if previous_extrapolation is not None:
                        change = _norm(extrapolation - previous_extrapolation)
                        scale = _norm(interior + extrapolation)
                        # Rounding in the ratio is amplified by 1 / (1 - ratio)**2.
                        noise = ROUNDOFF * size * ratio / (1.0 - ratio) ** 2
                        allowed = max(
                            EXTRAPOLATION_FRACTION * self.tol * scale,
                            min(noise, self.tol * scale),
                            ROUNDOFF * scale,
                            ABSOLUTE_FLOOR,
                        )
                        if change <= allowed:
                            self.error += change
                            logger.debug(
                                "integrate_01: %s endpoint resolved after %d levels",
                                side,
                                level + 1,
                            )
                            return extrapolation, False
                    previous_extrapolation = extrapolation
                else:
                    previous_extrapolation = None
                previous_ratio = ratio
            previous_size = size

        raise QuadratureAccuracyError(
            interior + accumulated, self.error, f"{side} endpoint refinement"
        )

    def divergence(self, side: str) -> QuadratureResult:
        logger.debug("integrate_01: divergent at the %s endpoint", side)
        return QuadratureResult(
            value=math.inf,
            error=math.inf,
            divergent=True,
            divergent_side=side,
            evaluations=self.evaluations,
        )
