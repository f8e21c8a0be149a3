# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Constructive approximation of weighted Cauchy transforms by regularized
transforms analytic across the boundary of the domain.

"""
from .cutoff import SHAPES, ApproximatingDomain, CutoffFamily, cutoff_eval
from .regularized import (
    cauchy_type_integral,
    gamma_n_coeffs,
    gamma_n_eval,
    regularized_moment,
    sample_gamma_n_on_boundary,
)
from .witness import (
    DEFAULT_N_LIST,
    MembershipPreconditionError,
    convergence_report,
    rho_bound_check,
    witness_membership,
)

__all__ = (
    "ApproximatingDomain",
    "CutoffFamily",
    "DEFAULT_N_LIST",
    "MembershipPreconditionError",
    "SHAPES",
    "cauchy_type_integral",
    "convergence_report",
    "cutoff_eval",
    "gamma_n_coeffs",
    "gamma_n_eval",
    "regularized_moment",
    "rho_bound_check",
    "sample_gamma_n_on_boundary",
    "witness_membership",
)
