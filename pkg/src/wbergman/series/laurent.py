# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Laurent series b_1 / zeta + b_2 / zeta**2 + ... vanishing at infinity.

"""
from typing import Sequence, Union

import numpy as np
from atom.api import Atom, Typed
from numpy.polynomial import polynomial as P

from .taylor import SeriesDomainError, _normalized

#: Minimal distance to the unit circle of the points a Laurent series is evaluated at.
EVAL_EXCLUSION = 1e-6


class LaurentSeries(Atom):
    """Series sum_{k >= 1} b_k zeta**-k, holomorphic outside the closed unit disk.

    coefficients[0] holds b_1. The zero series has no coefficient.

    """

    #: Coefficients b_1 ... b_M.
    coefficients = Typed(np.ndarray)

    def __init__(self, coefficients: Sequence[complex] = ()):
        super().__init__(coefficients=_normalized(coefficients, keep_one=False))
        self.freeze()

    @property
    def order(self) -> int:
        """Index M of the last nonzero coefficient, 0 for the zero series."""
        return self.coefficients.size

    def coefficient(self, k: int) -> complex:
        """Return b_k, k >= 1."""
        return complex(self.coefficients[k - 1]) if 1 <= k <= self.order else 0j

    def evaluate(self, zeta):
        """Evaluate anywhere outside the origin."""
        u = 1.0 / np.asarray(zeta, dtype=complex)
        return u * P.polyval(u, self.coefficients) if self.order else np.zeros_like(u)

    def __call__(self, zeta):
        return eval_laurent(self, zeta)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        return LaurentSeries(P.polyadd(self._padded(), other._padded()))

    def __mul__(self, factor: complex) -> "LaurentSeries":
        return LaurentSeries(self.coefficients * factor)

    __rmul__ = __mul__

    # --- Private API

    def _padded(self) -> np.ndarray:
        return self.coefficients if self.order else np.zeros(1, dtype=complex)

    def _post_setattr_coefficients(self, old, new):
        new.flags.writeable = False


def eval_laurent(
    series: LaurentSeries,
    zeta: Union[complex, np.ndarray],
    exclusion: float = EVAL_EXCLUSION,
):
    """Evaluate a Laurent series at points satisfying |zeta| >= 1 + exclusion.

    Raises
    ------
    SeriesDomainError
        Raised if one point lies too close to the unit disk.

    """
    zeta = np.asarray(zeta, dtype=complex)
    inside = np.abs(zeta) < 1.0 + exclusion
    if inside.any():
        raise SeriesDomainError(
            zeta[inside].ravel()[:5].tolist(), f"|zeta| >= 1 + {exclusion:g}"
        )
    return series.evaluate(zeta)[()]


def derivative_laurent(series: LaurentSeries) -> LaurentSeries:
    """Derivative of a Laurent series.

    The derivative of b_k zeta**-k is -k b_k zeta**-(k + 1), hence the derivative
    has no 1 / zeta term.

    """
    if not series.order:
        return LaurentSeries()
    k = np.arange(1, series.order + 1)
    return LaurentSeries(np.concatenate([[0.0], -k * series.coefficients]))
