# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Reports returned by the numerical checks.

"""
import math
from typing import Any, Mapping, Optional

import numpy as np
import xarray as xr
from atom.api import Atom, Bool, Dict, Str, Typed


class CheckReport(Atom):
    """Outcome of a numerical check.

    The verdict is the human readable classification, `passed` the boolean used to
    compute exit codes and the values hold the quantities backing the verdict.

    """

    #: Name of the check that produced the report.
    operation = Str()

    #: Classification of the outcome.
    verdict = Str()

    #: Whether the check succeeded.
    passed = Bool()

    #: Scalar quantities backing the verdict.
    values = Dict(str)

    #: Optional per-index or per-parameter table.
    table = Typed(xr.Dataset)

    def __init__(
        self,
        operation: str,
        verdict: str,
        passed: bool,
        values: Optional[Mapping[str, Any]] = None,
        table: Optional[xr.Dataset] = None,
    ):
        super().__init__(
            operation=operation,
            verdict=verdict,
            passed=bool(passed),
            values=dict(values or {}),
            table=table,
        )
        self.freeze()

    def to_dict(self) -> dict:
        """Json compatible representation of the report."""
        result = {
            "operation": self.operation,
            "verdict": self.verdict,
            "pass": self.passed,
            "values": {k: to_jsonable(v) for k, v in self.values.items()},
        }
        if self.table is not None:
            result["table"] = dataset_records(self.table)
        return result


def to_jsonable(value):
    """Convert numbers, arrays and containers to json compatible objects.

    Complex numbers become [re, im] pairs and non finite floats their string form.

    """
    if isinstance(value, Mapping):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, complex):
        return [to_jsonable(value.real), to_jsonable(value.imag)]
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value


def dataset_records(data: xr.Dataset) -> list:
    """Rows of a one dimensional dataset as json compatible dictionaries."""
    frame = data.to_dataframe().reset_index()
    return [
        {str(k): to_jsonable(v) for k, v in row.items()}
        for row in frame.to_dict(orient="records")
    ]
