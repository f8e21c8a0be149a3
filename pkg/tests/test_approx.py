# -----------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Test the cutoffs, the regularized transforms and the approximation checks.

"""
import math

import mpmath
import numpy as np
import pytest

from wbergman.approx import (
    SHAPES,
    ApproximatingDomain,
    CutoffFamily,
    MembershipPreconditionError,
    cauchy_type_integral,
    convergence_report,
    cutoff_eval,
    gamma_n_coeffs,
    gamma_n_eval,
    regularized_moment,
    rho_bound_check,
    sample_gamma_n_on_boundary,
    witness_membership,
)
from wbergman.quadrature import DiskRule
from wbergman.series import TaylorSeries, WindowError, rho
from wbergman.series.boundary import BoundaryFunction
from wbergman.transform import (
    BergmanElement,
    StandoffError,
    bergman_norm_series,
    cauchy_transform_disk,
)
from wbergman.weights import WeightSpec

RAMPS = [s for s in SHAPES if s != "unit"]


@pytest.mark.parametrize("t, expected", [(0.2, 0.0), (0.6, 1.0), (0.375, 0.5)])
def test_linear_ramp_examples(t, expected):
    """alpha_4 vanishes below 1/4, equals 1 above 1/2 and is linear in between."""
    assert cutoff_eval(CutoffFamily("linear-ramp", 4), t) == pytest.approx(expected)


def test_smoothstep_midpoint():
    """The cubic smoothstep is symmetric about the middle of the transition."""
    cutoff = CutoffFamily("smoothstep-cubic", 4)
    assert cutoff(0.375) == pytest.approx(0.5)
    assert cutoff(0.3) == pytest.approx(0.2**2 * 2.6)


@pytest.mark.parametrize("shape", RAMPS)
def test_cutoff_sandwich(shape):
    """0 <= alpha_n <= 1, with the transition on [1/n, 2/n], nondecreasing in n."""
    t = np.linspace(0, 1, 10001)
    previous = np.zeros_like(t)
    for n in range(2, 11):
        values = cutoff_eval(CutoffFamily(shape, n), t)
        assert np.all((values >= 0) & (values <= 1))
        assert np.all(values[t <= 1 / n - 1e-12] == 0)
        assert np.all(values[t >= 2 / n + 1e-12] == 1)
        assert np.all(np.diff(values) >= -1e-15)
        assert np.all(values >= previous - 1e-15)
        previous = values


def test_unit_cutoff():
    """An infinite index selects the unit cutoff."""
    cutoff = CutoffFamily("linear-ramp", math.inf)
    assert cutoff.is_unit and cutoff.shape == "unit"
    assert cutoff.breakpoints == ()
    np.testing.assert_array_equal(cutoff(np.array([0.0, 0.5, 1.0])), 1.0)
    assert CutoffFamily("unit").n == math.inf
    assert CutoffFamily("smoothstep-cubic", 4).with_n(math.inf).is_unit
    assert cutoff.with_n(8).shape == "linear-ramp"


def test_invalid_cutoffs():
    """Indices below 2 and points outside [0, 1] are rejected."""
    with pytest.raises(ValueError):
        CutoffFamily("linear-ramp", 1.5)
    with pytest.raises(ValueError):
        cutoff_eval(CutoffFamily("linear-ramp", 4), 1.5)
    with pytest.raises(ValueError):
        cutoff_eval(CutoffFamily("linear-ramp", 4), -0.1)


def test_approximating_domain(identity_map, poly_map):
    """G_n is the image of the disk of radius 1 - 1/n and G_n lies in G_(n+1)."""
    domain = ApproximatingDomain(identity_map, 4)
    assert domain.radius == 0.75
    assert domain.contains(0.5)
    assert not domain.contains(0.8)
    np.testing.assert_allclose(np.abs(domain.boundary(16)), 0.75)
    for n in (2, 5, 16):
        report = ApproximatingDomain(poly_map, n).check_nesting()
        assert report.verdict == "nested"
    with pytest.raises(ValueError):
        ApproximatingDomain(identity_map, 1)


def test_regularized_moment(const_weight):
    """omega^2_0 = 2 * int (1 - t) alpha_2(t) dt = 1/12."""
    cutoff = CutoffFamily("linear-ramp", 2)
    expected = float(
        mpmath.quad(lambda t: 2 * (1 - t) * min(max(2 * t - 1, 0), 1), [0, 0.5, 1])
    )
    assert expected == pytest.approx(1 / 12)
    assert regularized_moment(const_weight, 0, cutoff) == pytest.approx(
        expected, rel=1e-10
    )
    assert regularized_moment(const_weight, 3, cutoff.with_n(math.inf)) == (
        pytest.approx(1 / 4)
    )
    with pytest.raises(ValueError):
        regularized_moment(const_weight, -1, cutoff)


def test_gamma_n_coefficients(const_weight):
    """b^n_1 = -conj(a_0) omega^n_0 increases toward the unregularized value."""
    h1 = TaylorSeries([1j])
    cutoff = CutoffFamily("linear-ramp", 2)
    first = gamma_n_coeffs(h1, const_weight, cutoff)
    assert first.coefficient(1) == pytest.approx(1j / 12, rel=1e-10)

    moduli = [
        abs(gamma_n_coeffs(h1, const_weight, cutoff.with_n(n)).coefficient(1))
        for n in (2, 4, 8, 16, 32, 64)
    ]
    assert np.all(np.diff(moduli) > 0)
    assert moduli[-1] < 1
    limit = gamma_n_coeffs(h1, const_weight, cutoff.with_n(math.inf))
    assert limit.coefficient(1) == pytest.approx(1j)


def test_gamma_n_coefficients_limits(const_weight):
    """Zero series have no coefficient and the window must hold the series."""
    cutoff = CutoffFamily("linear-ramp", 4)
    assert gamma_n_coeffs(TaylorSeries([0]), const_weight, cutoff).order == 0
    with pytest.raises(WindowError):
        gamma_n_coeffs(TaylorSeries([1, 1, 1]), const_weight, cutoff, window=2)


def test_gamma_n_eval_outside_support(identity_map, const_weight):
    """gamma_n is given by its Laurent series outside the disk of radius 1 - 1/n."""
    h1 = TaylorSeries([1])
    cutoff = CutoffFamily("linear-ramp", 4)
    b1 = gamma_n_coeffs(h1, const_weight, cutoff).coefficient(1)
    for zeta in (2.0, 0.9, -0.85j):
        value = gamma_n_eval(h1, const_weight, identity_map, cutoff, zeta)
        assert value == pytest.approx(b1 / zeta, rel=1e-6)
    with pytest.raises(StandoffError):
        gamma_n_eval(h1, const_weight, identity_map, cutoff, 0.78)


def test_gamma_n_eval_unit_cutoff(identity_map, const_weight):
    """The unit cutoff gives back the weighted Cauchy transform."""
    value = gamma_n_eval(
        TaylorSeries([1]), const_weight, identity_map, CutoffFamily("unit"), 2.0
    )
    assert value == pytest.approx(-0.5, rel=1e-7)


def test_cauchy_type_integral():
    """exp(-i theta) has Cauchy integral -1/zeta outside the circle."""
    theta = 2 * np.pi * np.arange(64) / 64
    values, window = cauchy_type_integral(np.exp(-1j * theta), 2.0)
    assert values == pytest.approx(-0.5, abs=1e-14)
    assert window.window == 15
    assert abs(window.coefficient(-1) - 1) <= 1e-14

    values, _ = cauchy_type_integral(np.full(64, 3.0), np.array([2.0, -4j]))
    np.testing.assert_allclose(values, 0, atol=1e-14)


def test_cauchy_type_integral_standoff():
    """Points on the circle are rejected."""
    with pytest.raises(StandoffError):
        cauchy_type_integral(np.ones(16), 1.0)
    with pytest.raises(WindowError):
        cauchy_type_integral(np.ones(16), 2.0, window=8)


def test_boundary_samples_recover_coefficients(rng, identity_map, const_weight):
    """Boundary samples of gamma_n give back its Laurent coefficients."""
    h1 = TaylorSeries.random(8, rng)
    cutoff = CutoffFamily("linear-ramp", 8)
    rule = DiskRule(tol=1e-11)
    samples = sample_gamma_n_on_boundary(
        h1, const_weight, identity_map, cutoff, 64, rule
    )
    _, window = cauchy_type_integral(samples, 2.0, window=9)
    expected = gamma_n_coeffs(h1, const_weight, cutoff).coefficients
    np.testing.assert_allclose(window.negative_part()[:9], expected, atol=1e-8)
    assert np.all(np.abs(window.negative_part()[9:]) <= 1e-8)

    with pytest.raises(ValueError):
        sample_gamma_n_on_boundary(
            h1, const_weight, identity_map, CutoffFamily("unit"), 64
        )


def test_rho_bound_single_term(const_weight):
    """rho(gamma_n o phi) increases to ||g|| = sqrt(pi) for g = 1."""
    h1 = TaylorSeries([1])
    report = rho_bound_check(
        h1, const_weight, CutoffFamily("linear-ramp"), [64, 2, 8, math.inf]
    )
    assert report.passed
    assert report.verdict == "bounded"
    table = report.table
    assert list(table["n"].values) == [2, 8, 64, math.inf]
    assert np.all(np.diff(table["rho_n"].values) > 0)
    assert table["rho_n"].values[-1] == pytest.approx(math.sqrt(math.pi), abs=1e-10)
    assert report.values["g_norm"] == pytest.approx(math.sqrt(math.pi))


@pytest.mark.parametrize("shape", RAMPS)
@pytest.mark.parametrize(
    "weight",
    [WeightSpec.constant(), WeightSpec.power(0.5), WeightSpec.power(-0.5)],
    ids=["const", "pow:0.5", "pow:-0.5"],
)
def test_rho_bound_random(rng, shape, weight):
    """rho(gamma_n o phi) <= ||g|| with per-term domination."""
    for _ in range(5):
        h1 = TaylorSeries.random(int(rng.integers(0, 9)), rng)
        report = rho_bound_check(h1, weight, CutoffFamily(shape))
        assert report.passed
        assert report.values["max_term_excess"] <= 1e-12
        assert bool(np.all(report.table["monotone"].values))


def test_rho_bound_zero_series(const_weight):
    """The zero series trivially satisfies the bound."""
    report = rho_bound_check(TaylorSeries([0]), const_weight, CutoffFamily())
    assert report.passed
    assert report.values["sup_rho"] == 0


def test_convergence_disk(identity_map, const_weight):
    """sup |gamma - gamma_n| on |zeta| = 2 decreases below its bound."""
    n_list = [2, 4, 8, 16, 32, 64]
    report = convergence_report(
        TaylorSeries([1]),
        const_weight,
        identity_map,
        CutoffFamily("linear-ramp"),
        n_list,
        radius=2.0,
        points=64,
    )
    assert report.attrs["c_k"] == pytest.approx(1.0)
    assert report.attrs["radius"] == 2.0
    assert report.attrs["monotone"]
    assert bool(np.all(report["pass"].values))
    n = np.array(n_list, dtype=float)
    np.testing.assert_allclose(
        report["tail_mass"].values, math.pi * (4 / n - 4 / n**2), rtol=1e-7
    )
    np.testing.assert_allclose(
        report["bound"].values,
        math.sqrt(math.pi) / math.pi * np.sqrt(report["tail_mass"].values),
    )
    # gamma - gamma_0 = -(1 - omega^n_0) / zeta on the circle of radius 2
    coefficients = [
        gamma_n_coeffs(TaylorSeries([1]), const_weight, CutoffFamily(n=m))
        for m in n_list
    ]
    deviation = [(1 + b.coefficient(1).real) / 2 for b in coefficients]
    np.testing.assert_allclose(report["sup_dev"].values, deviation, rtol=1e-6)


def test_convergence_unit_row(identity_map, const_weight):
    """The infinite index has no deviation."""
    report = convergence_report(
        TaylorSeries([1, 0.5]),
        const_weight,
        identity_map,
        CutoffFamily("smoothstep-cubic"),
        [4, math.inf],
        radius=2.0,
        points=32,
    )
    row = report.sel(n=math.inf)
    assert float(row["sup_dev"]) == 0
    assert float(row["bound"]) == 0
    assert float(row["tail_mass"]) == 0
    assert float(row["rho_n"]) == pytest.approx(float(row["g_norm"]), rel=1e-12)


def test_convergence_polynomial_map(rng, poly_map, sqrt_weight):
    """Convergence on a circle around the image of a polynomial map."""
    h1 = TaylorSeries.random(8, rng)
    report = convergence_report(
        h1,
        sqrt_weight,
        poly_map,
        CutoffFamily("linear-ramp"),
        [2, 4, 8, 16],
        radius=3.0,
        points=64,
    )
    assert bool(np.all(report["pass"].values))
    g_norm = bergman_norm_series(BergmanElement(h1, sqrt_weight))
    np.testing.assert_allclose(report["g_norm"].values, g_norm)


def test_convergence_circle_inside(identity_map, const_weight):
    """The compact circle must lie outside the closed domain."""
    with pytest.raises(StandoffError):
        convergence_report(
            TaylorSeries([1]),
            const_weight,
            identity_map,
            CutoffFamily(),
            [2],
            radius=0.5,
        )


def test_witness_disk(identity_map, const_weight):
    """Every check passes for g = 1 on the disk."""
    report = witness_membership(
        TaylorSeries([1]),
        const_weight,
        identity_map,
        CutoffFamily("linear-ramp"),
        [2, 4, 8, math.inf],
    )
    assert report.verdict == "pass"
    assert report.values["nesting"]
    assert report.values["uniform_convergence"]
    assert report.values["rho_bound"]
    assert "sampled_window_error" not in report.values


def test_witness_polynomial_map(rng, poly_map, sqrt_weight):
    """Every check passes on the image of a polynomial map."""
    h1 = TaylorSeries.random(4, rng)
    report = witness_membership(
        h1, sqrt_weight, poly_map, CutoffFamily("smoothstep-cubic"), [2, 4]
    )
    assert report.passed
    assert report.values["sampled_window_error"] <= 1e-6
    assert report.values["sup_rho"] <= report.values["g_norm"] + 1e-9


def test_witness_precondition(identity_map):
    """Weights that are not integrable are rejected."""
    with pytest.raises(MembershipPreconditionError) as e:
        witness_membership(
            TaylorSeries([1]), WeightSpec.power(-1), identity_map, CutoffFamily()
        )
    assert "pow:-1" in str(e.value)


def test_unregularized_limit(identity_map, sqrt_weight):
    """The unit cutoff reproduces the coefficients of the transform."""
    h1 = TaylorSeries([1, -2j, 0.5])
    expected = cauchy_transform_disk(BergmanElement(h1, sqrt_weight)).series
    limit = gamma_n_coeffs(h1, sqrt_weight, CutoffFamily("unit"))
    np.testing.assert_allclose(limit.coefficients, expected.coefficients)
    window = BoundaryFunction.from_negative(limit.coefficients)
    assert rho(window, sqrt_weight) == pytest.approx(
        bergman_norm_series(BergmanElement(h1, sqrt_weight)), rel=1e-12
    )
