# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Rendering of command reports as JSON, CSV or a plain text table.

JSON is the canonical form, the two other formats render the result records only.

"""
import json

import pandas as pd

from ..reports import to_jsonable


def render(report: dict, fmt: str = "json") -> str:
    """Render a report in the requested format."""
    if fmt == "json":
        return json.dumps(to_jsonable(report), indent=2)
    frame = records_frame(report["results"])
    if fmt == "csv":
        return frame.to_csv(index=False)
    if fmt == "table":
        lines = [
            f"{report['operation']}: {'pass' if report['pass'] else 'FAIL'}",
            frame.to_string(index=False) if not frame.empty else "(no results)",
        ]
        return "\n".join(lines) + "\n"
    raise ValueError(f"Unknown output format {fmt!r}")


def records_frame(records: list) -> pd.DataFrame:
    """Flatten result records into a data frame.

    Nested values are written as compact JSON and the operation column is dropped
    when every record shares the same operation.

    """
    rows = [{k: _cell(v) for k, v in r.items()} for r in records]
    frame = pd.DataFrame(rows)
    if "operation" in frame and frame["operation"].nunique() == 1:
        frame = frame.drop(columns="operation")
    return frame


def _cell(value):
    value = to_jsonable(value)
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return value
