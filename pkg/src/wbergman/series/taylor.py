# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Truncated Taylor series of holomorphic functions in the unit disk.

"""
from typing import Optional, Sequence, Union

import numpy as np
from atom.api import Atom, Typed
from numpy.polynomial import polynomial as P

#: Tolerance on |z| - 1 accepted when evaluating on the closed unit disk.
DISK_SLACK = 1e-12

#: Default truncation degree of series.
DEFAULT_DEGREE = 64


class SeriesDomainError(ValueError):
    """Raised when a series is evaluated outside of its domain."""

    def __init__(self, points, domain: str):
        self.points = points
        self.domain = domain

    def __str__(self):
        return f"Points {self.points!r} lie outside of {self.domain}"


def _normalized(coefficients, keep_one: bool) -> np.ndarray:
    values = np.array(coefficients, dtype=complex).ravel()
    nonzero = np.flatnonzero(values)
    if nonzero.size:
        return values[: nonzero[-1] + 1]
    return np.zeros(1 if keep_one else 0, dtype=complex)


class TaylorSeries(Atom):
    """Polynomial a_0 + a_1 z + ... + a_N z**N.

    Trailing zero coefficients are dropped so that the last coefficient is nonzero
    unless the series is identically zero.

    """

    #: Coefficients a_0 ... a_N.
    coefficients = Typed(np.ndarray)

    def __init__(self, coefficients: Sequence[complex] = (0,)):
        super().__init__(coefficients=_normalized(coefficients, keep_one=True))
        self.freeze()

    @classmethod
    def random(
        cls, degree: int = DEFAULT_DEGREE, rng: Optional[np.random.Generator] = None
    ) -> "TaylorSeries":
        """Series with standard complex gaussian coefficients."""
        if degree < 0:
            raise ValueError(f"The degree must be non-negative, got {degree}")
        rng = rng if rng is not None else np.random.default_rng()
        values = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
        return cls(values)

    @property
    def degree(self) -> int:
        return self.coefficients.size - 1

    @property
    def is_zero(self) -> bool:
        return not np.any(self.coefficients)

    def coefficient(self, k: int) -> complex:
        return complex(self.coefficients[k]) if 0 <= k <= self.degree else 0j

    def evaluate(self, z):
        """Evaluate the polynomial anywhere in the plane."""
        return P.polyval(z, self.coefficients)

    def __call__(self, z):
        return eval_taylor(self, z)

    def __add__(self, other: "TaylorSeries") -> "TaylorSeries":
        return TaylorSeries(P.polyadd(self.coefficients, other.coefficients))

    def __sub__(self, other: "TaylorSeries") -> "TaylorSeries":
        return TaylorSeries(P.polysub(self.coefficients, other.coefficients))

    def __mul__(self, factor: complex) -> "TaylorSeries":
        return TaylorSeries(self.coefficients * factor)

    __rmul__ = __mul__

    def __neg__(self) -> "TaylorSeries":
        return TaylorSeries(-self.coefficients)

    # --- Private API

    def _post_setattr_coefficients(self, old, new):
        new.flags.writeable = False


def eval_taylor(series: TaylorSeries, z: Union[complex, np.ndarray]):
    """Evaluate a series on the closed unit disk.

    Raises
    ------
    SeriesDomainError
        Raised if one point satisfies |z| > 1.

    """
    z = np.asarray(z, dtype=complex)
    outside = np.abs(z) > 1.0 + DISK_SLACK
    if outside.any():
        raise SeriesDomainError(z[outside].ravel()[:5].tolist(), "the closed unit disk")
    return series.evaluate(z)[()]
