# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Radial weights, their moments and the conditions they may satisfy.

"""
from .conditions import (
    check_condition_41,
    check_condition_42,
    check_integrability,
    check_volberg,
)
from .moments import (
    DIVERGENT,
    MomentSequence,
    inverse_moment,
    moment,
    muckenhoupt_ratio,
)
from .table import TableColumnError, WeightTableLoader, load_weight_table
from .weight import InvalidWeightError, WeightDomainError, WeightSpec, eval_weight

__all__ = (
    "DIVERGENT",
    "InvalidWeightError",
    "MomentSequence",
    "TableColumnError",
    "WeightDomainError",
    "WeightSpec",
    "WeightTableLoader",
    "check_condition_41",
    "check_condition_42",
    "check_integrability",
    "check_volberg",
    "eval_weight",
    "inverse_moment",
    "load_weight_table",
    "moment",
    "muckenhoupt_ratio",
)
