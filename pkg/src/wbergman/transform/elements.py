# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Elements of weighted Bergman spaces and their Cauchy transforms.

"""
from typing import Optional

import numpy as np
from atom.api import Atom, Typed

from ..conformal.maps import ConformalMap
from ..series.laurent import LaurentSeries
from ..series.taylor import TaylorSeries
from ..weights.weight import WeightSpec


class BergmanElement(Atom):
    """Element g of the weighted Bergman space of a domain G = phi(unit disk).

    The element is stored through its pull back h1 = (g o phi) phi' to the disk,
    which belongs to the weighted Bergman space of the disk with the same norm.

    """

    #: Taylor series of the pull back h1.
    series = Typed(TaylorSeries)

    #: Weight of the space.
    weight = Typed(WeightSpec)

    #: Map of the disk onto the domain, the identity for the disk itself.
    map = Typed(ConformalMap)

    def __init__(
        self,
        series: TaylorSeries,
        weight: WeightSpec,
        conformal_map: Optional[ConformalMap] = None,
    ):
        super().__init__(
            series=series, weight=weight, map=conformal_map or ConformalMap.identity()
        )
        self.freeze()

    def on_domain(self, z):
        """Evaluate g(z) = h1(psi(z)) / phi'(psi(z)) for z in the closure of G."""
        w = self.map.inverse(z)
        return self.series.evaluate(w) / self.map.derivative(w)

    def scaled(self, factor: complex) -> "BergmanElement":
        return BergmanElement(self.series * factor, self.weight, self.map)


class CauchyImage(Atom):
    """Laurent series of a weighted Cauchy transform, in the variable zeta of the disk
    exterior."""

    #: Coefficients b_1, b_2, ...
    series = Typed(LaurentSeries)

    #: Weight of the space the transform was computed in.
    weight = Typed(WeightSpec)

    def __init__(self, series: LaurentSeries, weight: WeightSpec):
        super().__init__(series=series, weight=weight)
        self.freeze()

    def evaluate(self, zeta):
        return self.series.evaluate(np.asarray(zeta, dtype=complex))
