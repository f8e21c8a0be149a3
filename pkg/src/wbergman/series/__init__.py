# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Taylor, Laurent and boundary coefficient series.

"""
from .boundary import (
    DEFAULT_WINDOW,
    BoundaryFunction,
    WindowError,
    fourier_coeffs,
    rho,
)
from .io import read_series_json, write_series_json, write_window_csv
from .laurent import EVAL_EXCLUSION, LaurentSeries, derivative_laurent, eval_laurent
from .taylor import DEFAULT_DEGREE, SeriesDomainError, TaylorSeries, eval_taylor

__all__ = (
    "DEFAULT_DEGREE",
    "DEFAULT_WINDOW",
    "BoundaryFunction",
    "EVAL_EXCLUSION",
    "LaurentSeries",
    "SeriesDomainError",
    "TaylorSeries",
    "WindowError",
    "derivative_laurent",
    "eval_laurent",
    "eval_taylor",
    "fourier_coeffs",
    "read_series_json",
    "rho",
    "write_series_json",
    "write_window_csv",
)
