# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Functions on the unit circle known through a window of Fourier coefficients.

"""
import math
from typing import Optional, Sequence

import numpy as np
import xarray as xr
from atom.api import Atom, Int, Typed

#: Default half width K of coefficient windows.
DEFAULT_WINDOW = 128


class WindowError(ValueError):
    """Raised when a coefficient window is too small for the requested use."""

    def __init__(self, window: int, required: int, reason: str):
        self.window = window
        self.required = required
        self.reason = reason

    def __str__(self):
        return (
            f"A window of {self.required} coefficients is required ({self.reason}), "
            f"got {self.window}"
        )


class BoundaryFunction(Atom):
    """Fourier coefficients f_k, |k| <= K, of a function on the unit circle.

    coefficients[k + K] holds f_k.

    """

    #: Coefficients f_-K ... f_K.
    coefficients = Typed(np.ndarray)

    #: Half width K of the window.
    window = Int()

    #: Number of samples the coefficients were extracted from, 0 if unknown.
    sample_count = Int()

    def __init__(self, coefficients: Sequence[complex], sample_count: int = 0):
        values = np.array(coefficients, dtype=complex).ravel()
        if values.size % 2 == 0:
            raise ValueError("A coefficient window has an odd length 2K + 1")
        super().__init__(
            coefficients=values, window=values.size // 2, sample_count=sample_count
        )
        self.freeze()

    @classmethod
    def from_negative(
        cls, negative: Sequence[complex], window: Optional[int] = None
    ) -> "BoundaryFunction":
        """Build the window of a function whose only coefficients are f_-1, f_-2, ..."""
        negative = np.asarray(negative, dtype=complex).ravel()
        window = negative.size if window is None else window
        if window < negative.size:
            raise WindowError(window, negative.size, "all coefficients must fit")
        values = np.zeros(2 * window + 1, dtype=complex)
        values[window - negative.size : window] = negative[::-1]
        return cls(values)

    def coefficient(self, k: int) -> complex:
        """Return f_k, zero outside the window."""
        if abs(k) > self.window:
            return 0j
        return complex(self.coefficients[k + self.window])

    def negative_part(self) -> np.ndarray:
        """Array f_-1, f_-2, ..., f_-K."""
        return self.coefficients[: self.window][::-1].copy()

    def to_dataset(self) -> xr.Dataset:
        k = np.arange(-self.window, self.window + 1)
        return xr.Dataset(
            {"re": ("k", self.coefficients.real), "im": ("k", self.coefficients.imag)},
            coords={"k": k},
        )

    # --- Private API

    def _post_setattr_coefficients(self, old, new):
        new.flags.writeable = False


def fourier_coeffs(samples: Sequence[complex], window: int) -> BoundaryFunction:
    """Extract the coefficients |k| <= window from equispaced samples.

    The samples are taken at the angles 2 pi j / N, j = 0 ... N - 1.

    Raises
    ------
    WindowError
        Raised if N < 4 * window + 4, which would let aliasing pollute the window.

    """
    samples = np.asarray(samples, dtype=complex).ravel()
    count = samples.size
    if window < 0:
        raise ValueError(f"The window must be non-negative, got {window}")
    if count < 4 * window + 4:
        raise WindowError(count, 4 * window + 4, "samples to avoid aliasing")
    spectrum = np.fft.fft(samples) / count
    k = np.arange(-window, window + 1)
    return BoundaryFunction(spectrum[k % count], sample_count=count)


def rho(function: BoundaryFunction, moments, tol: float = 0.0) -> float:
    """Weighted norm sqrt(pi * sum_k |f_-k|**2 / omega_(k-1)) of the negative part.

    Parameters
    ----------
    function : BoundaryFunction
        Window whose negative coefficients are used.
    moments : MomentSequence or WeightSpec
        Source of the moments omega_k.

    """
    moments = getattr(moments, "moments", moments)
    negative = function.negative_part()
    total = 0.0
    for k in np.flatnonzero(negative) + 1:
        total += abs(negative[k - 1]) ** 2 / moments.moment(int(k - 1), tol)
    return math.sqrt(math.pi * total)
