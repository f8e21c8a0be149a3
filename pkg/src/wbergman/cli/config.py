# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Configuration of a command line run.

"""
import json
from typing import Any, Mapping

import numpy as np
import toml
from atom.api import Atom, Enum, Float, Int, List, Str

from ..approx.cutoff import SHAPES
from ..approx.witness import DEFAULT_N_LIST
from ..quadrature.integrate import DEFAULT_TOLERANCE
from ..quadrature.rules import ANGULAR_COUNT, DEFAULT_TOLERANCE_2D, DiskRule, RadialRule
from ..series.boundary import DEFAULT_WINDOW
from ..series.taylor import DEFAULT_DEGREE

#: Output formats of the reports.
FORMATS = ("json", "csv", "table")


class RunConfig(Atom):
    """Parameters of a run, read from a TOML file and from the command line.

    Only the members tagged as preferences are read and written. Values given on
    the command line override those of the file.

    """

    #: Weight description (const, pow:<a>, expexp, table:<path>).
    weight = Str("const").tag(pref=True)

    #: Conformal map description (identity, poly:..., scale:..., moebius:...).
    map = Str("identity").tag(pref=True)

    #: Taylor series of the pull back h1: JSON, a file or random[:<degree>].
    series = Str("[[1, 0]]").tag(pref=True)

    #: Negative Fourier coefficients of a boundary function.
    boundary = Str("[[1, 0]]").tag(pref=True)

    #: Relative tolerance of one dimensional integrals.
    tol = Float(DEFAULT_TOLERANCE).tag(pref=True)

    #: Relative tolerance of integrals over the disk.
    tol_2d = Float(DEFAULT_TOLERANCE_2D).tag(pref=True)

    #: Largest moment index.
    kmax = Int(200).tag(pref=True)

    #: Half width K of coefficient windows.
    window = Int(DEFAULT_WINDOW).tag(pref=True)

    #: Degree N of random series.
    degree = Int(DEFAULT_DEGREE).tag(pref=True)

    #: Minimal number M of angles of disk quadratures.
    angular_count = Int(ANGULAR_COUNT).tag(pref=True)

    #: Number of dyadic levels of the fixed radial rule.
    panel_depth = Int(12).tag(pref=True)

    #: Indices of the regularized transforms, inf selects the unit cutoff.
    n_list = List(float, [float(n) for n in DEFAULT_N_LIST]).tag(pref=True)

    #: Radius of the compact circle, 0 selects 1.5 times the largest modulus.
    radius = Float(0.0).tag(pref=True)

    #: Evaluation points of the transform.
    zetas = List(str, ["2"]).tag(pref=True)

    #: Shape of the cutoffs.
    cutoff = Enum(*[s for s in SHAPES if s != "unit"]).tag(pref=True)

    #: Sample points of the log-log diagnostic, empty for the default ones.
    samples = List(float).tag(pref=True)

    #: Output format.
    format = Enum(*FORMATS).tag(pref=True)

    #: Seed of the random generator.
    seed = Int(0).tag(pref=True)

    @classmethod
    def preference_names(cls) -> tuple:
        return tuple(
            name
            for name, member in cls.members().items()
            if member.metadata and member.metadata.get("pref")
        )

    @classmethod
    def from_toml(cls, path: str) -> "RunConfig":
        """Read a configuration file, keys may be in a [run] table."""
        data = toml.load(path)
        config = cls()
        config.update_members_from_preferences(data.get("run", data))
        return config

    def preferences_from_members(self) -> dict:
        return {name: getattr(self, name) for name in self.preference_names()}

    def update_members_from_preferences(self, preferences: Mapping[str, Any]):
        """Update the members from a mapping of preferences.

        Raises
        ------
        KeyError
            Raised if a key does not name a preference.

        """
        names = self.preference_names()
        for key, value in preferences.items():
            name = key.replace("-", "_")
            if name not in names:
                raise KeyError(f"Unknown configuration key {key!r}")
            setattr(self, name, _coerce(name, value))

    def update_from_namespace(self, namespace):
        """Override members by the command line options that were given."""
        given = {
            name: getattr(namespace, name)
            for name in self.preference_names()
            if getattr(namespace, name, None) is not None
        }
        self.update_members_from_preferences(given)

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def disk_rule(self) -> DiskRule:
        return DiskRule(
            RadialRule(depth=self.panel_depth),
            angular_count=self.angular_count,
            tol=self.tol_2d,
        )


def _coerce(name: str, value):
    if name in ("series", "boundary") and not isinstance(value, str):
        return json.dumps(value)
    if name == "n_list":
        values = value.split(",") if isinstance(value, str) else value
        return [float(v) for v in values]
    if name == "zetas":
        values = value.split(",") if isinstance(value, str) else value
        return [str(v) for v in values]
    if name == "samples":
        values = value.split(",") if isinstance(value, str) else value
        return [float(v) for v in values]
    if name in ("tol", "tol_2d", "radius"):
        return float(value)
    if name in ("kmax", "window", "degree", "angular_count", "panel_depth", "seed"):
        return int(value)
    return value
