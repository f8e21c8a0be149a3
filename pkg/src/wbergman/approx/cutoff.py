# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Cutoffs alpha_n and the approximating domains G_n they are attached to.

A cutoff is a continuous function of t = 1 - |w| with values in [0, 1], vanishing on
[0, 1/n] and equal to 1 on [2/n, 1].

"""
import math
from typing import Tuple

import numpy as np
from atom.api import Atom, Enum, Float, Typed

from ..conformal.maps import ConformalMap
from ..conformal.validation import distance_to_image
from ..reports import CheckReport

#: Supported shapes of the transition between the two plateaus.
SHAPES = ("linear-ramp", "smoothstep-cubic", "unit")


class CutoffFamily(Atom):
    """Member alpha_n of a family of cutoffs.

    The "unit" shape is the limit n = infinity, alpha identically 1. It is selected
    by passing math.inf as n.

    """

    #: Shape of the transition on [1/n, 2/n].
    shape = Enum(*SHAPES)

    #: Index of the cutoff, at least 2 or infinite.
    n = Float(math.inf)

    def __init__(self, shape: str = "linear-ramp", n: float = math.inf):
        if math.isinf(n) and n > 0:
            shape = "unit"
        elif shape == "unit":
            n = math.inf
        elif not n >= 2:
            raise ValueError(f"Cutoff index must be at least 2, got {n}")
        super().__init__(shape=shape, n=float(n))
        self.freeze()

    @property
    def is_unit(self) -> bool:
        return self.shape == "unit"

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        """Points at which the cutoff is not smooth."""
        if self.is_unit:
            return ()
        return (1.0 / self.n, 2.0 / self.n)

    def with_n(self, n: float) -> "CutoffFamily":
        """Cutoff of the same family for another index."""
        shape = self.shape if not self.is_unit else "linear-ramp"
        return CutoffFamily(shape, n)

    def __call__(self, t):
        return cutoff_eval(self, t)


def cutoff_eval(cutoff: CutoffFamily, t):
    """Evaluate alpha_n at t in [0, 1].

    Raises
    ------
    ValueError
        Raised if some t lies outside [0, 1].

    """
    t = np.asarray(t, dtype=float)
    if np.any(t < 0) or np.any(t > 1) or np.any(np.isnan(t)):
        raise ValueError("Cutoffs are defined on [0, 1]")
    return _ramp(cutoff, t)


def _ramp(cutoff: CutoffFamily, t: np.ndarray):
    if cutoff.is_unit:
        return np.ones(np.shape(t))[()]
    s = np.clip(cutoff.n * t - 1.0, 0.0, 1.0)
    if cutoff.shape == "smoothstep-cubic":
        s = s * s * (3.0 - 2.0 * s)
    return s[()]


class ApproximatingDomain(Atom):
    """Domain G_n = {z in G, |psi(z)| < 1 - 1/n}, image of the disk of radius
    1 - 1/n."""

    #: Map of the unit disk onto G.
    map = Typed(ConformalMap)

    #: Index of the domain.
    n = Float()

    def __init__(self, conformal_map: ConformalMap, n: float):
        if not n >= 2:
            raise ValueError(f"Approximating domains are indexed by n >= 2, got {n}")
        super().__init__(map=conformal_map, n=float(n))
        self.freeze()

    @property
    def radius(self) -> float:
        return 1.0 - 1.0 / self.n

    def contains(self, z):
        """Whether points lie in the open domain G_n."""
        return (np.asarray(distance_to_image(self.map, z, self.radius)) < 0)[()]

    def boundary(self, count: int = 512) -> np.ndarray:
        """Equispaced samples of the boundary curve phi(|w| = 1 - 1/n)."""
        theta = 2 * np.pi * np.arange(count) / count
        return self.map.forward(self.radius * np.exp(1j * theta))

    def check_nesting(self, count: int = 512) -> CheckReport:
        """Check on boundary samples that the closure of G_n lies in G_(n+1)."""
        following = ApproximatingDomain(self.map, self.n + 1)
        inner = following.contains(self.boundary(count))
        outer = np.asarray(distance_to_image(self.map, following.boundary(count))) < 0
        passed = bool(np.all(inner) and np.all(outer))
        return CheckReport(
            "approximating_domain_nesting",
            "nested" if passed else "not-nested",
            passed,
            {"n": self.n, "inner_violations": int(np.sum(~np.asarray(inner)))},
        )
