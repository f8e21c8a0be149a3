# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Quadrature rules of the unit disk.

"""
from typing import Optional

import numpy as np
from atom.api import Atom, Bool, Float, Int, Typed

from .integrate import GAUSS_ORDER

#: Default relative tolerance of disk integrals.
DEFAULT_TOLERANCE_2D = 1e-8

#: Default number of equispaced angles.
ANGULAR_COUNT = 128

#: Largest number of equispaced angles used by automatic choices.
MAX_ANGULAR_COUNT = 1 << 14


class RadialRule(Atom):
    """Composite Gauss-Legendre rule on [0, 1] graded toward both ends.

    Panels are the dyadic intervals [2**-j, 2**-(j-1)] below 1/2 and their mirror
    images above 1/2. The distances to the circle, 1 - r, are stored separately so
    that weights singular at t = 0 are evaluated without cancellation.

    """

    #: Number of Gauss-Legendre nodes per panel.
    order = Int(GAUSS_ORDER)

    #: Number of dyadic levels on each side.
    depth = Int(12)

    #: Radii of the nodes.
    nodes = Typed(np.ndarray)

    #: Distances 1 - r of the nodes to the unit circle.
    gaps = Typed(np.ndarray)

    #: Quadrature weights for dr.
    weights = Typed(np.ndarray)

    def __init__(self, order: int = GAUSS_ORDER, depth: int = 12):
        if order < 2 or depth < 1:
            raise ValueError(f"Invalid radial rule: order={order}, depth={depth}")
        x, w = np.polynomial.legendre.leggauss(order)
        unit, unit_weights = 0.5 * (x + 1.0), 0.5 * w
        edges = [0.0] + [0.5**j for j in range(depth, 0, -1)]
        low = np.concatenate([a + (b - a) * unit for a, b in zip(edges, edges[1:])])
        low_weights = np.concatenate(
            [(b - a) * unit_weights for a, b in zip(edges, edges[1:])]
        )
        super().__init__(
            order=order,
            depth=depth,
            nodes=np.concatenate([low, 1.0 - low]),
            gaps=np.concatenate([1.0 - low, low]),
            weights=np.concatenate([low_weights, low_weights]),
        )
        self.freeze()

    # --- Private API

    def _post_setattr_nodes(self, old, new):
        new.flags.writeable = False

    def _post_setattr_gaps(self, old, new):
        new.flags.writeable = False

    def _post_setattr_weights(self, old, new):
        new.flags.writeable = False


class DiskRule(Atom):
    """Description of how integrals over the unit disk are computed.

    Adaptive rules integrate the angular means radially with `integrate_01`, fixed
    rules use the tensor product of the radial rule with the equispaced angles, which
    is exact for polynomials in z and conj(z) of low enough degree.

    """

    #: Radial rule of the fixed tensor product.
    radial = Typed(RadialRule)

    #: Number of equispaced angles.
    angular_count = Int(ANGULAR_COUNT)

    #: Relative tolerance of the adaptive radial integration.
    tol = Float(DEFAULT_TOLERANCE_2D)

    #: Whether the radial integration is adaptive.
    adaptive = Bool(True)

    def __init__(
        self,
        radial: Optional[RadialRule] = None,
        angular_count: int = ANGULAR_COUNT,
        tol: float = DEFAULT_TOLERANCE_2D,
        adaptive: bool = True,
    ):
        if angular_count < 8:
            raise ValueError(f"At least 8 angles are required, got {angular_count}")
        if not tol > 0:
            raise ValueError(f"The tolerance must be positive, got {tol}")
        super().__init__(
            radial=radial or RadialRule(),
            angular_count=angular_count + angular_count % 2,
            tol=tol,
            adaptive=adaptive,
        )
        self.freeze()

    def angles(self, count: int = 0) -> np.ndarray:
        """Equispaced angles, at least angular_count of them."""
        count = max(count, self.angular_count)
        count += count % 2
        return 2 * np.pi * np.arange(count) / count

    def evolve(self, **changes) -> "DiskRule":
        """Copy of the rule with some parameters changed."""
        parameters = dict(
            radial=self.radial,
            angular_count=self.angular_count,
            tol=self.tol,
            adaptive=self.adaptive,
        )
        parameters.update(changes)
        return DiskRule(**parameters)
