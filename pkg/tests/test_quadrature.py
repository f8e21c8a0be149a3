# -----------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Test the interval and disk quadratures.

"""
import math

import numpy as np
import pytest

from wbergman.quadrature import (
    DiskRule,
    QuadratureAccuracyError,
    RadialRule,
    gauss_legendre,
    integrate_01,
    integrate_disk,
    integrate_domain,
    integrate_exterior,
    tail_mass,
)


def test_smooth_integrals():
    """Polynomials and smooth functions are integrated to machine precision."""
    assert integrate_01(lambda t: np.ones_like(t)).value == pytest.approx(1, rel=1e-12)
    assert integrate_01(lambda t: t**3).value == pytest.approx(0.25, rel=1e-12)
    assert integrate_01(np.exp).value == pytest.approx(math.e - 1, rel=1e-11)


def test_integrable_endpoint_singularities():
    """Integrable singularities at both endpoints are resolved."""
    assert integrate_01(lambda t: t**-0.5).value == pytest.approx(2, rel=1e-9)
    assert integrate_01(np.log).value == pytest.approx(-1, rel=1e-9)
    result = integrate_01(lambda t: (1 - t) ** -0.5)
    assert not result.divergent
    assert result.value == pytest.approx(2, rel=1e-9)


def test_slowly_converging_endpoint():
    """Pieces decaying almost as slowly as 1 / t still converge."""
    result = integrate_01(lambda t: t**-0.995)
    assert not result.divergent
    assert result.value == pytest.approx(200, rel=1e-9)


@pytest.mark.parametrize(
    "integrand, side",
    [(lambda t: 1 / t, "left"), (lambda t: 1 / (1 - t), "right")],
)
def test_divergent_integrals(integrand, side):
    """Logarithmically divergent integrals are detected on the proper side."""
    result = integrate_01(integrand)
    assert result.divergent
    assert result.divergent_side == side
    assert math.isinf(result.value)


def test_breakpoints():
    """Kinks declared as breakpoints do not spoil the accuracy."""
    result = integrate_01(lambda t: np.abs(t - 0.3), breakpoints=[0.3])
    assert result.value == pytest.approx(0.29, rel=1e-12)


def test_vector_integrand():
    """Trailing axes of the integrand are integrated component-wise."""
    result = integrate_01(lambda t: np.stack([t, t**2], axis=-1))
    np.testing.assert_allclose(result.value, [0.5, 1 / 3], rtol=1e-12)


def test_invalid_tolerance():
    """The tolerance must be positive."""
    with pytest.raises(ValueError):
        integrate_01(np.exp, tol=0)


def test_gauss_legendre_panel():
    """A single panel is exact for low degree polynomials."""
    assert gauss_legendre(lambda t: t**3, 0, 2) == pytest.approx(4, rel=1e-14)


def test_quadrature_accuracy_error_bracket():
    """The error exposes the interval in which the value lies."""
    error = QuadratureAccuracyError(1.0, 0.5, "budget exhausted")
    assert error.bracket == (0.5, 1.5)
    assert "budget exhausted" in str(error)


def test_quadrature_accuracy_error_infinite_estimate():
    """An infinite estimate only bounds the integral from below by 0."""
    error = QuadratureAccuracyError(math.inf, 1.0, "endpoint refinement")
    assert error.bracket == (0.0, math.inf)
    assert "inf" in str(error)
    assert QuadratureAccuracyError(1.0, 2.0, "bisection").bracket == (0.0, 3.0)


def test_disk_area():
    """The area of the disk and a radial moment."""
    assert integrate_disk(lambda w: np.ones(w.shape)).value.real == pytest.approx(
        math.pi, rel=1e-8
    )
    value = integrate_disk(lambda w: np.abs(w) ** 2).value
    assert value.real == pytest.approx(math.pi / 2, rel=1e-8)


@pytest.mark.parametrize("p, q", [(1, 0), (2, 1), (0, 3), (4, 2)])
def test_disk_monomial_orthogonality(p, q):
    """w**p conj(w)**q integrates to zero over the disk when p != q."""
    rule = DiskRule(RadialRule(depth=4), angular_count=16, adaptive=False)
    value = integrate_disk(lambda w: w**p * np.conj(w) ** q, rule).value
    assert abs(value) <= 1e-12


def test_fixed_disk_rule():
    """The fixed tensor rule is exact for polynomials in w and conj(w)."""
    rule = DiskRule(RadialRule(depth=4), angular_count=16, adaptive=False)
    value = integrate_disk(lambda w: np.abs(w) ** 4, rule).value
    assert value.real == pytest.approx(math.pi / 3, rel=1e-12)


def test_radial_factor():
    """A radial factor multiplies the integrand as a function of 1 - |w|."""
    value = integrate_disk(lambda w: np.ones(w.shape), radial_factor=lambda t: t).value
    # 2 pi * int_0^1 r (1 - r) dr
    assert value.real == pytest.approx(math.pi / 3, rel=1e-8)


def test_exterior_integral():
    """|zeta|**-4 integrates to pi over the exterior of the disk."""
    result = integrate_exterior(lambda z: np.abs(z) ** -4.0)
    assert result.value.real == pytest.approx(math.pi, rel=1e-8)


def test_exterior_integral_without_decay():
    """Integrands that do not decay at infinity are rejected."""
    with pytest.raises(QuadratureAccuracyError):
        integrate_exterior(lambda z: np.ones(z.shape))


def test_domain_area(poly_map):
    """The area of a polynomial image is pi * sum_k k |c_k|**2."""
    result = integrate_domain(lambda z: np.ones(np.shape(z)), poly_map)
    assert result.value.real == pytest.approx(1.125 * math.pi, rel=1e-8)


@pytest.mark.parametrize("n", [2, 4, 8, 16, 32, 64])
def test_tail_mass_disk(identity_map, const_weight, n):
    """The boundary layer of the disk has area pi (4/n - 4/n**2)."""
    rule = DiskRule(tol=1e-12)
    expected = math.pi * (4 / n - 4 / n**2)
    assert abs(tail_mass(identity_map, const_weight, n, rule) - expected) <= 1e-10


def test_tail_mass_limits(identity_map, const_weight):
    """The infinite index has no boundary layer and n must be at least 2."""
    assert tail_mass(identity_map, const_weight, math.inf) == 0
    with pytest.raises(ValueError):
        tail_mass(identity_map, const_weight, 1.5)


def test_tail_mass_decreases(poly_map, sqrt_weight):
    """The boundary layer shrinks as n grows."""
    masses = [tail_mass(poly_map, sqrt_weight, n) for n in (2, 4, 8)]
    assert masses[0] > masses[1] > masses[2] > 0
