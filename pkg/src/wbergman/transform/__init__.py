# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Bergman space elements, their norms and the weighted Cauchy transform.

"""
from .cauchy import (
    STANDOFF,
    StandoffError,
    cauchy_transform_disk,
    cauchy_transform_exterior,
    cauchy_transform_quadrature,
    weighted_cauchy_integral,
)
from .elements import BergmanElement, CauchyImage
from .norms import (
    b21_norm_series,
    bergman_norm_quadrature,
    bergman_norm_series,
    dirichlet_norm_quadrature,
    dirichlet_norm_series,
    per_term_ratio,
)
from .pairing import check_cs_bound, pairing_functional

__all__ = (
    "BergmanElement",
    "CauchyImage",
    "STANDOFF",
    "StandoffError",
    "b21_norm_series",
    "bergman_norm_quadrature",
    "bergman_norm_series",
    "cauchy_transform_disk",
    "cauchy_transform_exterior",
    "cauchy_transform_quadrature",
    "check_cs_bound",
    "dirichlet_norm_quadrature",
    "dirichlet_norm_series",
    "pairing_functional",
    "per_term_ratio",
    "weighted_cauchy_integral",
)
