# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Textual descriptions of weights, maps and series used on the command line.

Weights:  const | pow:<alpha> | expexp | table:<path>, optionally followed by
          *<scale>.
Maps:     identity | poly:<c1>,<c2>,... | scale:<lambda> | moebius:<a>,<lambda>.
Series:   an inline JSON array of [re, im] pairs, a JSON or CSV file, or
          random[:<degree>].

Complex numbers are written as Python literals, i may be used in place of j.

"""
from typing import Optional, Sequence

import numpy as np

from ..conformal.maps import ConformalMap
from ..conformal.validation import validate_map
from ..series.boundary import BoundaryFunction
from ..series.io import read_series_json
from ..series.taylor import DEFAULT_DEGREE, TaylorSeries
from ..weights.table import load_weight_table
from ..weights.weight import WeightSpec


class SpecParseError(ValueError):
    """Raised when a textual description cannot be parsed."""

    def __init__(self, kind: str, text: str, reason: str):
        self.kind = kind
        self.text = text
        self.reason = reason

    def __str__(self):
        return f"Invalid {self.kind} {self.text!r}: {self.reason}"


def parse_complex(text) -> complex:
    """Parse a complex number such as 2, -0.5j or 1+2i."""
    if isinstance(text, (int, float, complex)):
        return complex(text)
    cleaned = str(text).strip().replace(" ", "").replace("i", "j")
    try:
        return complex(cleaned)
    except ValueError:
        raise SpecParseError("complex number", str(text), "not a complex literal")


def parse_complex_list(values: Sequence) -> np.ndarray:
    """Parse numbers given either individually or as comma separated strings."""
    result = []
    for value in values:
        if isinstance(value, str):
            result.extend(parse_complex(v) for v in value.split(",") if v.strip())
        else:
            result.append(parse_complex(value))
    return np.array(result, dtype=complex)


def parse_weight(text: str) -> WeightSpec:
    """Build a weight from its textual description."""
    body, scale = text.strip(), 1.0
    if "*" in body:
        head, _, tail = body.rpartition("*")
        try:
            scale = float(tail)
        except ValueError:
            raise SpecParseError("weight", text, f"invalid scale {tail!r}")
        body = head

    family, _, argument = body.partition(":")
    if family == "const" and not argument:
        weight = WeightSpec.constant()
    elif family == "pow" and argument:
        try:
            alpha = float(argument)
        except ValueError:
            raise SpecParseError("weight", text, f"invalid exponent {argument!r}")
        weight = WeightSpec.power(alpha)
    elif family == "expexp" and not argument:
        weight = WeightSpec.double_exponential()
    elif family == "table" and argument:
        weight = load_weight_table(argument)
    else:
        raise SpecParseError(
            "weight", text, "expected const, pow:<a>, expexp or table:<path>"
        )
    return weight.scaled(scale) if scale != 1.0 else weight


def parse_map(text: str, validate: bool = True) -> ConformalMap:
    """Build a conformal map from its textual description.

    Raises
    ------
    SpecParseError
        Raised if the description is malformed.
    NotUnivalentError
        Raised if validate is True and the map is not univalent on the closed disk.

    """
    kind, _, argument = text.strip().partition(":")
    values = [parse_complex(v) for v in argument.split(",")] if argument else []
    if kind == "identity" and not values:
        conformal_map = ConformalMap.identity()
    elif kind == "poly" and values:
        conformal_map = ConformalMap.polynomial(values)
    elif kind == "scale" and len(values) == 1:
        conformal_map = ConformalMap.moebius_rescale(0.0, values[0])
    elif kind == "moebius" and len(values) == 2:
        conformal_map = ConformalMap.moebius_rescale(values[0], values[1])
    else:
        raise SpecParseError(
            "map", text, "expected identity, poly:<c1,...>, scale:<l> or moebius:<a,l>"
        )
    return validate_map(conformal_map) if validate else conformal_map


def parse_series(
    text: str,
    rng: Optional[np.random.Generator] = None,
    degree: int = DEFAULT_DEGREE,
) -> TaylorSeries:
    """Build a Taylor series from inline JSON, a file or a random specification."""
    text = text.strip()
    if text.startswith("random"):
        _, _, argument = text.partition(":")
        try:
            degree = int(argument) if argument else degree
        except ValueError:
            raise SpecParseError("series", text, f"invalid degree {argument!r}")
        return TaylorSeries.random(degree, rng)
    try:
        return TaylorSeries(read_series_json(text))
    except ValueError as e:
        raise SpecParseError("series", text, str(e))


def parse_boundary(text: str) -> BoundaryFunction:
    """Window holding the negative coefficients f_-1, f_-2, ... given as a series."""
    try:
        negative = read_series_json(text.strip())
    except ValueError as e:
        raise SpecParseError("boundary function", text, str(e))
    return BoundaryFunction.from_negative(negative)
