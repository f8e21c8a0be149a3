# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Reading and writing coefficient arrays.

Coefficients are stored in JSON as arrays of [re, im] pairs and in CSV as the
columns k, re, im.

"""
import json
import os
from typing import Sequence, Union

import numpy as np
import pandas as pd

from .boundary import BoundaryFunction


def parse_coefficients(content: Union[str, Sequence]) -> np.ndarray:
    """Parse a JSON array of [re, im] pairs (plain numbers are accepted as reals)."""
    data = json.loads(content) if isinstance(content, str) else content
    if not isinstance(data, list):
        raise ValueError("Coefficients must be given as a JSON array")
    values = []
    for entry in data:
        if isinstance(entry, (list, tuple)):
            if len(entry) != 2:
                raise ValueError(f"Expected a [re, im] pair, got {entry!r}")
            values.append(complex(float(entry[0]), float(entry[1])))
        else:
            values.append(complex(float(entry)))
    return np.array(values, dtype=complex)


def format_coefficients(values: Sequence[complex]) -> list:
    """JSON compatible [re, im] pairs."""
    return [[float(v.real), float(v.imag)] for v in np.asarray(values, dtype=complex)]


def read_series_json(source: str) -> np.ndarray:
    """Read coefficients from a file (JSON, or CSV with k, re, im columns) or from
    an inline JSON array."""
    if not os.path.isfile(source):
        return parse_coefficients(source)
    if os.path.splitext(source)[1].lower() == ".csv":
        frame = pd.read_csv(source, comment="#", skipinitialspace=True)
        frame = frame.sort_values("k")
        real = frame["re"].to_numpy(dtype=float)
        return real + 1j * frame["im"].to_numpy(dtype=float)
    with open(source, "r") as f:
        return parse_coefficients(f.read())


def write_series_json(path: str, values: Sequence[complex]) -> None:
    with open(path, "w") as f:
        json.dump(format_coefficients(values), f)


def window_frame(window: BoundaryFunction) -> pd.DataFrame:
    """Coefficients of a window as k, re, im columns."""
    return window.to_dataset().to_dataframe().reset_index()[["k", "re", "im"]]


def write_window_csv(window: BoundaryFunction, path: str) -> None:
    window_frame(window).to_csv(path, index=False)
