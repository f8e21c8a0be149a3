# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Radial weights of the unit disk.

A weight is a positive function of the distance to the unit circle, t = 1 - |w|.
Weights are evaluated on (0, 1] only and every evaluation routine is vectorized.

"""
import math
from typing import Optional, Sequence, Tuple

import numpy as np
from atom.api import Atom, Enum, Float, ForwardTyped, Str, Typed


def _moment_sequence():
    from .moments import MomentSequence

    return MomentSequence


#: Supported weight families.
FAMILIES = ("constant", "power", "double-exponential", "tabulated")


class WeightDomainError(ValueError):
    """Raised when a weight is evaluated outside of (0, 1]."""

    def __init__(self, t):
        self.t = t

    def __str__(self):
        return f"Weights are defined on (0, 1], got t={self.t!r}"


class InvalidWeightError(ValueError):
    """Raised when a weight description does not define a positive weight."""

    def __init__(self, reason: str):
        self.reason = reason

    def __str__(self):
        return f"Invalid weight: {self.reason}"


class WeightSpec(Atom):
    """Description of a radial weight omega(t), t = 1 - |w|.

    Instances are immutable. The moment cache attached to each weight is the only
    mutable state and it is guarded by its own lock.

    """

    #: Family of the weight.
    family = Enum(*FAMILIES)

    #: Exponent of the power family, omega(t) = scale * t**alpha.
    alpha = Float()

    #: Positive multiplicative constant applied to the weight.
    scale = Float(1.0)

    #: Abscissae of a tabulated weight, strictly increasing in (0, 1].
    knots = Typed(np.ndarray)

    #: Weight values at the knots of a tabulated weight.
    values = Typed(np.ndarray)

    #: Free form description (source file of a tabulated weight for example).
    description = Str()

    #: Lazily filled moment sequences of this weight.
    moments = ForwardTyped(_moment_sequence)

    def __init__(
        self,
        family: str = "constant",
        *,
        alpha: float = 0.0,
        scale: float = 1.0,
        knots: Optional[Sequence[float]] = None,
        values: Optional[Sequence[float]] = None,
        description: str = "",
    ):
        if not (math.isfinite(scale) and scale > 0):
            raise InvalidWeightError(f"the scale must be positive, got {scale}")
        if not math.isfinite(alpha):
            raise InvalidWeightError(f"the exponent must be finite, got {alpha}")
        kwargs = {}
        if family == "tabulated":
            kwargs = _validate_table(knots, values)
        super().__init__(
            family=family, alpha=alpha, scale=scale, description=description, **kwargs
        )
        self.moments = _moment_sequence()(weight=self)
        self.freeze()

    @classmethod
    def constant(cls, scale: float = 1.0) -> "WeightSpec":
        return cls("constant", scale=scale)

    @classmethod
    def power(cls, alpha: float, scale: float = 1.0) -> "WeightSpec":
        return cls("power", alpha=alpha, scale=scale)

    @classmethod
    def double_exponential(cls, scale: float = 1.0) -> "WeightSpec":
        """Weight exp(-exp(1/t)), vanishing to all orders at t = 0."""
        return cls("double-exponential", scale=scale)

    @classmethod
    def tabulated(
        cls, knots: Sequence[float], values: Sequence[float], description: str = ""
    ) -> "WeightSpec":
        """Log-linear interpolation of positive samples."""
        return cls("tabulated", knots=knots, values=values, description=description)

    def scaled(self, factor: float) -> "WeightSpec":
        """Same weight multiplied by a positive constant."""
        return WeightSpec(
            self.family,
            alpha=self.alpha,
            scale=self.scale * factor,
            knots=self.knots,
            values=self.values,
            description=self.description,
        )

    def eval(self, t):
        """Evaluate the weight without checking the domain."""
        if self.family == "constant":
            return np.full(np.shape(t), self.scale)[()]
        if self.family == "power":
            return self.scale * np.power(t, self.alpha)
        return np.exp(self.log_eval(t))

    def log_eval(self, t):
        """Logarithm of the weight, free of underflow."""
        if self.family == "constant":
            return np.full(np.shape(t), math.log(self.scale))[()]
        if self.family == "power":
            return self.alpha * np.log(t) + math.log(self.scale)
        if self.family == "double-exponential":
            return math.log(self.scale) - np.exp(np.divide(1.0, t))
        return np.interp(t, self.knots, np.log(self.values)) + math.log(self.scale)

    def log_log_inverse(self, t):
        """Evaluate log(log(1 / omega(t))).

        Points where log(1 / omega) is not positive give nan or -inf.

        """
        with np.errstate(invalid="ignore", divide="ignore"):
            if self.family == "double-exponential":
                inv_t = np.divide(1.0, t)
                # log(exp(1/t) - log c) = 1/t + log(1 - log(c) exp(-1/t))
                return inv_t + np.log1p(-math.log(self.scale) * np.exp(-inv_t))
            return np.log(-self.log_eval(t))

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        """Points of (0, 1) at which the weight is not smooth."""
        if self.family == "tabulated":
            return tuple(float(k) for k in self.knots if 0.0 < k < 1.0)
        return ()

    @property
    def spec_string(self) -> str:
        """Textual form accepted by the command line."""
        if self.family == "constant":
            base = "const"
        elif self.family == "power":
            base = f"pow:{self.alpha:g}"
        elif self.family == "double-exponential":
            base = "expexp"
        else:
            base = f"table:{self.description}"
        return base if self.scale == 1.0 else f"{base}*{self.scale:g}"

    # --- Private API

    def _post_setattr_knots(self, old, new):
        new.flags.writeable = False

    def _post_setattr_values(self, old, new):
        new.flags.writeable = False


def eval_weight(weight: WeightSpec, t):
    """Evaluate a weight, enforcing that every point lies in (0, 1].

    Raises
    ------
    WeightDomainError
        Raised if one point lies outside (0, 1].

    """
    t_array = np.asarray(t, dtype=float)
    outside = ~((t_array > 0.0) & (t_array <= 1.0))
    if outside.any():
        raise WeightDomainError(t_array[outside].ravel()[0].item())
    return weight.eval(t_array)


def _validate_table(knots, values) -> dict:
    if knots is None or values is None:
        raise InvalidWeightError("a tabulated weight requires knots and values")
    knots = np.array(knots, dtype=float).ravel()
    values = np.array(values, dtype=float).ravel()
    if knots.size != values.size or knots.size < 2:
        raise InvalidWeightError(
            "a tabulated weight requires at least two knots and as many values, "
            f"got {knots.size} knots and {values.size} values"
        )
    if not np.all((knots > 0) & (knots <= 1)):
        raise InvalidWeightError("the knots must lie in (0, 1]")
    if not np.all(np.diff(knots) > 0):
        raise InvalidWeightError("the knots must be strictly increasing")
    if not np.all(np.isfinite(values) & (values > 0)):
        raise InvalidWeightError("the tabulated values must be finite and positive")
    return {"knots": knots, "values": values}
