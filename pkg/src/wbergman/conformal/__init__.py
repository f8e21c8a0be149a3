# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Conformal maps of the unit disk and their validation.

"""
from .maps import (
    ConformalMap,
    OutsideDomainError,
    TruncationError,
    boundary_point,
    boundary_tangent,
    derivative,
    forward,
    inverse,
    pullback,
)
from .validation import (
    NotUnivalentError,
    boundary_area,
    check_univalent,
    distance_to_image,
    max_modulus,
    validate_map,
)

__all__ = (
    "ConformalMap",
    "NotUnivalentError",
    "OutsideDomainError",
    "TruncationError",
    "boundary_area",
    "boundary_point",
    "boundary_tangent",
    "check_univalent",
    "derivative",
    "distance_to_image",
    "forward",
    "inverse",
    "max_modulus",
    "pullback",
    "validate_map",
)
