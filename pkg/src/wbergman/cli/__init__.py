# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Command line interface.

"""
from .commands import COMMANDS, make_report
from .config import FORMATS, RunConfig
from .output import records_frame, render
from .specs import (
    SpecParseError,
    parse_boundary,
    parse_complex,
    parse_map,
    parse_series,
    parse_weight,
)

__all__ = (
    "COMMANDS",
    "FORMATS",
    "RunConfig",
    "SpecParseError",
    "make_report",
    "parse_boundary",
    "parse_complex",
    "parse_map",
    "parse_series",
    "parse_weight",
    "records_frame",
    "render",
)
