# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Numerical integration on the unit interval, the unit disk and its images.

"""
from .disk import (
    integrate_disk,
    integrate_domain,
    integrate_exterior,
    kernel_angular_count,
    tail_mass,
)
from .integrate import (
    DEFAULT_TOLERANCE,
    QuadratureAccuracyError,
    QuadratureResult,
    gauss_legendre,
    integrate_01,
)
from .rules import ANGULAR_COUNT, DEFAULT_TOLERANCE_2D, DiskRule, RadialRule

__all__ = (
    "ANGULAR_COUNT",
    "DEFAULT_TOLERANCE",
    "DEFAULT_TOLERANCE_2D",
    "DiskRule",
    "QuadratureAccuracyError",
    "QuadratureResult",
    "RadialRule",
    "gauss_legendre",
    "integrate_01",
    "integrate_disk",
    "integrate_domain",
    "integrate_exterior",
    "kernel_angular_count",
    "tail_mass",
)
