# -----------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Test the weighted Cauchy transform, the norms and the pairing.

"""
import math

import numpy as np
import pytest

from wbergman.conformal import ConformalMap, pullback
from wbergman.quadrature import DiskRule, integrate_domain
from wbergman.series import BoundaryFunction, LaurentSeries, TaylorSeries
from wbergman.transform import (
    BergmanElement,
    CauchyImage,
    StandoffError,
    b21_norm_series,
    bergman_norm_quadrature,
    bergman_norm_series,
    cauchy_transform_disk,
    cauchy_transform_exterior,
    cauchy_transform_quadrature,
    check_cs_bound,
    dirichlet_norm_quadrature,
    dirichlet_norm_series,
    pairing_functional,
    per_term_ratio,
)
from wbergman.weights import DIVERGENT, WeightSpec, muckenhoupt_ratio

WEIGHTS = [WeightSpec.constant(), WeightSpec.power(0.5), WeightSpec.power(-0.5)]


@pytest.mark.parametrize("coefficients, expected", [([1], -0.5), ([0, 1], -0.125)])
def test_disk_transform_examples(const_weight, coefficients, expected):
    """Transforms of 1 and z for the constant weight, evaluated at 2."""
    element = BergmanElement(TaylorSeries(coefficients), const_weight)
    image = cauchy_transform_disk(element)
    assert image.evaluate(2.0) == pytest.approx(expected, abs=1e-14)
    quadrature = cauchy_transform_quadrature(element, 2.0)
    assert quadrature == pytest.approx(expected, rel=1e-7)


def test_disk_transform_coefficients(sqrt_weight):
    """b_k = -conj(a_(k-1)) omega_(k-1)."""
    element = BergmanElement(TaylorSeries([1j, 0, 2]), sqrt_weight)
    image = cauchy_transform_disk(element)
    moments = [sqrt_weight.moments.moment(k) for k in range(3)]
    np.testing.assert_allclose(
        image.series.coefficients, [1j * moments[0], 0, -2 * moments[2]]
    )


@pytest.mark.parametrize("weight", WEIGHTS[:2], ids=["const", "pow:0.5"])
def test_quadrature_against_closed_form(rng, weight):
    """The quadrature transform matches the Laurent series outside the disk."""
    element = BergmanElement(TaylorSeries.random(4, rng), weight)
    image = cauchy_transform_disk(element)
    radii = rng.uniform(1.1, 3.0, size=20)
    zeta = radii * np.exp(2j * np.pi * rng.uniform(size=20))
    values = cauchy_transform_quadrature(element, zeta)
    expected = image.evaluate(zeta)
    np.testing.assert_allclose(values, expected, rtol=1e-6)


def test_quadrature_standoff(const_weight):
    """Points too close to the domain are rejected."""
    element = BergmanElement(TaylorSeries([1]), const_weight)
    with pytest.raises(StandoffError):
        cauchy_transform_quadrature(element, 1.01)
    value = cauchy_transform_quadrature(element, 1.01, standoff=0.005)
    assert value == pytest.approx(-1 / 1.01, rel=1e-6)


def test_exterior_expansion(rng, poly_map, sqrt_weight):
    """For polynomial maps the expansion at infinity matches the quadrature."""
    h1 = TaylorSeries.random(3, rng)
    element = BergmanElement(h1, sqrt_weight, poly_map)
    expansion = cauchy_transform_exterior(element, kmax=96)
    zeta = np.array([3.0, -2.5j, 2 + 2j])
    np.testing.assert_allclose(
        cauchy_transform_quadrature(element, zeta), expansion.evaluate(zeta), rtol=1e-6
    )


def test_exterior_expansion_identity(rng, const_weight):
    """For the identity the expansion reduces to the disk transform."""
    element = BergmanElement(TaylorSeries.random(5, rng), const_weight)
    expansion = cauchy_transform_exterior(element, kmax=10)
    np.testing.assert_allclose(
        expansion.coefficients, cauchy_transform_disk(element).series.coefficients
    )


def test_exterior_expansion_moebius(const_weight):
    """Automorphisms have no expansion at infinity."""
    element = BergmanElement(
        TaylorSeries([1]), const_weight, ConformalMap.moebius_rescale(0.5)
    )
    with pytest.raises(ValueError):
        cauchy_transform_exterior(element)


def test_quadrature_moebius(const_weight):
    """Transform on the image of an automorphism, which is the disk of radius 2.

    The element g = 1 pulls back to phi' and its transform is -4 / zeta by the mean
    value property.

    """
    conformal_map = ConformalMap.moebius_rescale(0.4, 2.0)
    h1 = pullback(conformal_map, TaylorSeries([1]))
    element = BergmanElement(h1, const_weight, conformal_map)
    zeta = 3.0
    result = integrate_domain(
        lambda z: 1 / (z - zeta), conformal_map, radial_factor=const_weight.eval
    )
    direct = result.value / math.pi
    assert cauchy_transform_quadrature(element, zeta) == pytest.approx(
        direct, rel=1e-7
    )
    assert direct == pytest.approx(-4 / 3, rel=1e-7)


@pytest.mark.parametrize("weight", WEIGHTS, ids=["const", "pow:0.5", "pow:-0.5"])
def test_isometry(rng, weight):
    """||K g|| = ||g|| for random series."""
    for _ in range(100):
        degree = int(rng.integers(0, 33))
        element = BergmanElement(TaylorSeries.random(degree, rng), weight)
        norm = bergman_norm_series(element)
        image_norm = b21_norm_series(cauchy_transform_disk(element))
        assert abs(image_norm - norm) <= 1e-12 * norm


def test_isometry_example(const_weight):
    """1 + z has norm sqrt(3 pi / 2) for the constant weight."""
    element = BergmanElement(TaylorSeries([1, 1]), const_weight)
    expected = math.sqrt(3 * math.pi / 2)
    assert bergman_norm_series(element) == pytest.approx(expected, rel=1e-12)
    assert b21_norm_series(cauchy_transform_disk(element)) == pytest.approx(
        expected, rel=1e-12
    )


@pytest.mark.parametrize("weight", WEIGHTS, ids=["const", "pow:0.5", "pow:-0.5"])
def test_bergman_norm_quadrature(rng, weight):
    """The series norm matches the integral of |h1|**2 omega."""
    element = BergmanElement(TaylorSeries.random(6, rng), weight)
    rule = DiskRule(tol=1e-11)
    assert bergman_norm_quadrature(element, rule) == pytest.approx(
        bergman_norm_series(element), rel=1e-8
    )


def test_bergman_norm_quadrature_angles(const_weight):
    """Rules with too few angles are rejected."""
    element = BergmanElement(TaylorSeries.random(40), const_weight)
    with pytest.raises(ValueError):
        bergman_norm_quadrature(element, DiskRule(angular_count=64))


@pytest.mark.slow
def test_pullback_isometry(rng, poly_map, sqrt_weight):
    """The norm of h1 on the disk is the norm of h on the domain."""
    for _ in range(20):
        h = TaylorSeries.random(int(rng.integers(0, 4)), rng)
        h1 = pullback(poly_map, h)
        series_norm = bergman_norm_series(BergmanElement(h1, sqrt_weight, poly_map))
        result = integrate_domain(
            lambda z: np.abs(h.evaluate(z)) ** 2,
            poly_map,
            DiskRule(tol=1e-10),
            radial_factor=sqrt_weight.eval,
        )
        assert math.sqrt(result.value.real) == pytest.approx(series_norm, rel=1e-6)


@pytest.mark.parametrize("weight", WEIGHTS, ids=["const", "pow:0.5", "pow:-0.5"])
def test_dirichlet_norm(rng, weight):
    """Series and quadrature forms of the Dirichlet type norm agree."""
    b = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    image = CauchyImage(LaurentSeries(b), weight)
    series = dirichlet_norm_series(image)
    quadrature = dirichlet_norm_quadrature(image, DiskRule(tol=1e-10))
    assert quadrature == pytest.approx(series, rel=1e-6)


@pytest.mark.slow
@pytest.mark.parametrize("weight", WEIGHTS, ids=["const", "pow:0.5", "pow:-0.5"])
def test_dirichlet_equivalence_windows(rng, weight):
    """Both forms agree and the per-term ratios lie in [1, 4 C] for many windows."""
    c = max(muckenhoupt_ratio(weight, k) for k in range(9))
    for _ in range(50):
        size = int(rng.integers(1, 9))
        b = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        image = CauchyImage(LaurentSeries(b), weight)
        quadrature = dirichlet_norm_quadrature(image, DiskRule(tol=1e-10))
        assert quadrature == pytest.approx(dirichlet_norm_series(image), rel=1e-6)
        for k in range(1, size + 1):
            assert 1 - 1e-9 <= per_term_ratio(weight, k) <= 4 * c + 1e-9


def test_dirichlet_norm_example(const_weight):
    """1 / zeta has Dirichlet type norm sqrt(pi) for the constant weight."""
    image = CauchyImage(LaurentSeries([1]), const_weight)
    assert dirichlet_norm_series(image) == pytest.approx(math.sqrt(math.pi))


def test_dirichlet_norm_divergent():
    """Both forms diverge for omega(t) = t."""
    image = CauchyImage(LaurentSeries([1]), WeightSpec.power(1))
    assert dirichlet_norm_series(image) == DIVERGENT
    assert dirichlet_norm_quadrature(image) == DIVERGENT


@pytest.mark.parametrize("weight", WEIGHTS, ids=["const", "pow:0.5", "pow:-0.5"])
def test_dirichlet_sandwich(rng, weight):
    """rho <= D <= 2 sqrt(C) rho with C the largest ratio M_k involved."""
    b = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    image = CauchyImage(LaurentSeries(b), weight)
    norm = dirichlet_norm_series(image)
    lower = b21_norm_series(image)
    c = max(muckenhoupt_ratio(weight, k) for k in range(8))
    assert lower * (1 - 1e-9) <= norm <= 2 * math.sqrt(c) * lower * (1 + 1e-9)
    for k in range(1, 9):
        ratio = per_term_ratio(weight, k)
        assert 1 - 1e-9 <= ratio <= 4 * c + 1e-9


def test_per_term_ratio_constant(const_weight):
    """Every per-term ratio equals 1 for the constant weight."""
    for k in (1, 2, 10, 50):
        assert per_term_ratio(const_weight, k) == pytest.approx(1, abs=1e-9)
    with pytest.raises(ValueError):
        per_term_ratio(const_weight, 0)


def test_pairing_equality(const_weight):
    """The Cauchy-Schwarz bound is attained by c_-1 = 1 and h1 = 1."""
    boundary = BoundaryFunction.from_negative([1])
    h1 = TaylorSeries([1])
    assert pairing_functional(boundary, h1) == -1
    report = check_cs_bound(boundary, h1, const_weight)
    assert report.passed
    assert report.values["bound"] == pytest.approx(1, abs=1e-12)
    assert abs(report.values["modulus"] - report.values["bound"]) <= 1e-12


def test_pairing_bound(rng):
    """The bound holds for random boundary functions, series and weights."""
    for _ in range(100):
        weight = WEIGHTS[int(rng.integers(0, len(WEIGHTS)))]
        h1 = TaylorSeries.random(int(rng.integers(0, 8)), rng)
        negative = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        report = check_cs_bound(BoundaryFunction.from_negative(negative), h1, weight)
        assert report.passed


def test_pairing_window_too_small():
    """The window must reach the degree of the series."""
    from wbergman.series import WindowError

    with pytest.raises(WindowError):
        pairing_functional(BoundaryFunction.from_negative([1]), TaylorSeries([1, 1]))
