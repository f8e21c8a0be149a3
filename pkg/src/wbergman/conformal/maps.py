# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Conformal maps of the unit disk onto Jordan domains.

Three families are supported: the identity, polynomials vanishing at the origin and
the disk automorphisms followed by a rescaling,

    phi(w) = lam * (w + a) / (1 + conj(a) w),  |a| < 1.

Every routine is vectorized over its point arguments.

"""
import logging
import math
from typing import Optional, Sequence

import numpy as np
from atom.api import Atom, Enum, Float, Int, Typed, Value
from numpy.polynomial import polynomial as P

from ..series.taylor import TaylorSeries

logger = logging.getLogger(__name__)

#: Residual below which a Newton iterate is accepted.
NEWTON_TOL = 1e-12

#: Maximal number of Newton iterations.
NEWTON_MAX_ITER = 64

#: Maximal degree of a pulled back series.
MAX_PULLBACK_DEGREE = 256

#: Points farther than this from the closed disk count as having escaped.
ESCAPE_SLACK = 1e-9


class OutsideDomainError(ValueError):
    """Raised when the inverse map is requested at points outside of the domain."""

    def __init__(self, points):
        self.points = points

    def __str__(self):
        return f"Points {self.points!r} do not lie in the closure of the domain"


class TruncationError(ArithmeticError):
    """Raised when a pulled back series exceeds the allowed degree."""

    def __init__(self, degree: int, max_degree: int, discarded_mass: float):
        self.degree = degree
        self.max_degree = max_degree
        self.discarded_mass = discarded_mass

    def __str__(self):
        return (
            f"The pulled back series has degree {self.degree} > {self.max_degree}, "
            f"the discarded coefficients carry a squared mass {self.discarded_mass:.3e}"
        )


class ConformalMap(Atom):
    """Conformal map phi of the unit disk with phi(0) = 0 for the polynomial family."""

    #: Family of the map.
    kind = Enum("identity", "polynomial", "moebius_rescale")

    #: Coefficients c_1 ... c_d of a polynomial map.
    coefficients = Typed(np.ndarray)

    #: Automorphism parameter of the moebius_rescale family.
    a = Value(0j)

    #: Rescaling factor of the moebius_rescale family.
    lam = Value(1 + 0j)

    #: Residual tolerance of the Newton inversion.
    newton_tol = Float(NEWTON_TOL)

    #: Iteration budget of the Newton inversion.
    newton_max_iter = Int(NEWTON_MAX_ITER)

    def __init__(
        self,
        kind: str = "identity",
        coefficients: Optional[Sequence[complex]] = None,
        a: complex = 0j,
        lam: complex = 1 + 0j,
        newton_tol: float = NEWTON_TOL,
        newton_max_iter: int = NEWTON_MAX_ITER,
    ):
        a, lam = complex(a), complex(lam)
        if kind == "polynomial":
            values = np.array(coefficients, dtype=complex).ravel()
            nonzero = np.flatnonzero(values)
            if not nonzero.size or values[0] == 0:
                raise ValueError("A polynomial map requires c_1 != 0")
            values = values[: nonzero[-1] + 1]
        else:
            values = np.array([1.0 + 0j])
        if kind == "moebius_rescale" and not (abs(a) < 1 and lam != 0):
            raise ValueError(f"Invalid automorphism parameters a={a}, lam={lam}")
        super().__init__(
            kind=kind,
            coefficients=values,
            a=a,
            lam=lam,
            newton_tol=newton_tol,
            newton_max_iter=newton_max_iter,
        )
        self.freeze()

    @classmethod
    def identity(cls) -> "ConformalMap":
        return cls("identity")

    @classmethod
    def polynomial(cls, coefficients: Sequence[complex], **kwargs) -> "ConformalMap":
        """Map w -> c_1 w + ... + c_d w**d."""
        return cls("polynomial", coefficients, **kwargs)

    @classmethod
    def moebius_rescale(cls, a: complex, lam: complex = 1.0) -> "ConformalMap":
        return cls("moebius_rescale", a=a, lam=lam)

    @property
    def degree(self) -> int:
        """Polynomial degree, 0 for the moebius_rescale family."""
        return 0 if self.kind == "moebius_rescale" else self.coefficients.size

    @property
    def spec_string(self) -> str:
        """Textual form accepted by the command line."""
        if self.kind == "identity":
            return "identity"
        if self.kind == "polynomial":
            terms = ",".join(_format_complex(c) for c in self.coefficients)
            return f"poly:{terms}"
        return f"moebius:{_format_complex(self.a)},{_format_complex(self.lam)}"

    def forward(self, w):
        """Evaluate phi(w)."""
        w = np.asarray(w, dtype=complex)
        if self.kind == "moebius_rescale":
            return (self.lam * (w + self.a) / (1 + np.conj(self.a) * w))[()]
        return P.polyval(w, self._polynomial())[()]

    def derivative(self, w):
        """Evaluate phi'(w)."""
        w = np.asarray(w, dtype=complex)
        if self.kind == "moebius_rescale":
            scale = self.lam * (1 - abs(self.a) ** 2)
            return (scale / (1 + np.conj(self.a) * w) ** 2)[()]
        return P.polyval(w, P.polyder(self._polynomial()))[()]

    def inverse(self, z):
        """Evaluate psi(z), the inverse of phi, on the closure of the domain.

        Raises
        ------
        OutsideDomainError
            Raised if some point does not lie in the closure of the domain.

        """
        z = np.asarray(z, dtype=complex)
        if self.kind == "identity":
            w = z.copy()
        elif self.kind == "moebius_rescale":
            u = z / self.lam
            w = (u - self.a) / (1 - np.conj(self.a) * u)
        else:
            return self._newton_inverse(z.ravel()).reshape(z.shape)[()]
        escaped = np.abs(w) > 1.0 + ESCAPE_SLACK
        if escaped.any():
            raise OutsideDomainError(z[escaped].ravel()[:5].tolist())
        return w[()]

    def boundary_point(self, theta):
        """Evaluate phi(exp(i theta))."""
        return self.forward(np.exp(1j * np.asarray(theta, dtype=float)))

    def boundary_tangent(self, theta):
        """Derivative of theta -> phi(exp(i theta))."""
        unit = np.exp(1j * np.asarray(theta, dtype=float))
        return 1j * unit * self.derivative(unit)

    def angular_count(self, tol: float = 1e-15) -> int:
        """Number of equispaced angles resolving |phi'|**2 on circles."""
        if self.kind == "moebius_rescale" and abs(self.a) > 0:
            extra = 2 * math.ceil(math.log(tol) / math.log(abs(self.a)))
        else:
            extra = 2 * self.degree
        return extra + 8

    # --- Private API

    def _post_setattr_coefficients(self, old, new):
        new.flags.writeable = False

    def _polynomial(self) -> np.ndarray:
        """Coefficients of phi in increasing order, including the zero constant."""
        return np.concatenate([[0.0], self.coefficients])

    def _newton_step(self, z: np.ndarray, w: np.ndarray) -> np.ndarray:
        poly = self._polynomial()
        residual = P.polyval(w, poly) - z
        return _project(w - residual / P.polyval(w, P.polyder(poly)))

    def _residual(self, z: np.ndarray, w: np.ndarray) -> np.ndarray:
        return np.abs(P.polyval(w, self._polynomial()) - z)

    def _newton(self, z: np.ndarray, w: np.ndarray) -> np.ndarray:
        with np.errstate(all="ignore"):
            for _ in range(self.newton_max_iter):
                done = self._residual(z, w) <= self.newton_tol
                if done.all():
                    break
                w = np.where(done, w, self._newton_step(z, w))
            w = np.where(np.isfinite(w), w, 0j)
            polished = self._newton_step(z, w)
            better = self._residual(z, polished) < self._residual(z, w)
            return np.where(better, polished, w)

    def _newton_inverse(self, z: np.ndarray) -> np.ndarray:
        seed = _project(z / self.coefficients[0], 0.95)
        w = self._newton(z, seed)
        failed = ~(self._residual(z, w) <= self.newton_tol)
        if failed.any():
            logger.warning(
                "Newton inversion failed from the linear seed at %d points, "
                "restarting from a grid search",
                int(failed.sum()),
            )
            radii = np.linspace(0.0, 1.0, 17)
            angles = np.exp(2j * np.pi * np.arange(64) / 64)
            grid = (radii[:, None] * angles[None, :]).ravel()
            images = self.forward(grid)
            targets = z[failed]
            nearest = np.argmin(np.abs(targets[..., None] - images), axis=-1)
            restarted = self._newton(targets, grid[nearest])
            w[failed] = restarted
            failed = ~(self._residual(z, w) <= self.newton_tol)
            if failed.any():
                raise OutsideDomainError(z[failed].ravel()[:5].tolist())
        return w


def _project(w: np.ndarray, radius: float = 1.0) -> np.ndarray:
    """Radially project points onto the closed disk of the given radius."""
    modulus = np.abs(w)
    return np.where(modulus > radius, w * (radius / np.maximum(modulus, 1e-300)), w)


def _format_complex(value: complex) -> str:
    value = complex(value)
    if value.imag == 0:
        return f"{value.real:g}"
    return f"{value.real:g}{value.imag:+g}j"


def forward(conformal_map: ConformalMap, w):
    """Evaluate phi(w)."""
    return conformal_map.forward(w)


def derivative(conformal_map: ConformalMap, w):
    """Evaluate phi'(w)."""
    return conformal_map.derivative(w)


def inverse(conformal_map: ConformalMap, z):
    """Evaluate psi(z), the inverse of phi."""
    return conformal_map.inverse(z)


def boundary_point(conformal_map: ConformalMap, theta):
    """Evaluate phi(exp(i theta))."""
    return conformal_map.boundary_point(theta)


def boundary_tangent(conformal_map: ConformalMap, theta):
    """Derivative of theta -> phi(exp(i theta))."""
    return conformal_map.boundary_tangent(theta)


def pullback(
    conformal_map: ConformalMap,
    series: TaylorSeries,
    max_degree: int = MAX_PULLBACK_DEGREE,
) -> TaylorSeries:
    """Return the Taylor series of (h o phi) * phi' in the unit disk.

    Parameters
    ----------
    conformal_map : ConformalMap
        Map of the unit disk onto the domain G.
    series : TaylorSeries
        Polynomial h on G, in the z variable.
    max_degree : int
        Maximal degree of the result.

    Raises
    ------
    TruncationError
        Raised if the exact result has a larger degree, or if the coefficients
        beyond max_degree of a moebius_rescale pull back are not negligible.

    """
    if conformal_map.kind == "identity":
        return series
    if conformal_map.kind == "polynomial":
        phi = conformal_map._polynomial()
        composed = np.array([series.coefficients[-1]])
        for coefficient in series.coefficients[-2::-1]:
            composed = P.polyadd(P.polymul(composed, phi), [coefficient])
        result = P.polymul(composed, P.polyder(phi))
        result = np.trim_zeros(np.asarray(result, dtype=complex), "b")
        if result.size - 1 > max_degree:
            discarded = float(np.sum(np.abs(result[max_degree + 1 :]) ** 2))
            raise TruncationError(result.size - 1, max_degree, discarded)
        return TaylorSeries(result)

    count = 1 << int(math.ceil(math.log2(4 * (max_degree + 1))))
    unit = np.exp(2j * np.pi * np.arange(count) / count)
    values = series.evaluate(conformal_map.forward(unit))
    values = values * conformal_map.derivative(unit)
    spectrum = np.fft.fft(values) / count
    kept = spectrum[: max_degree + 1]
    discarded = float(np.sum(np.abs(spectrum[max_degree + 1 : count // 2]) ** 2))
    if discarded > 1e-24 * max(float(np.sum(np.abs(kept) ** 2)), 1.0):
        raise TruncationError(count // 2, max_degree, discarded)
    kept = np.where(np.abs(kept) > 1e-16 * np.max(np.abs(kept), initial=0.0), kept, 0)
    return TaylorSeries(kept)
