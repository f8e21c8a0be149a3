# -----------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Test the numerical diagnostics of the weight conditions.

"""
import math

import numpy as np
import pytest

from wbergman.conformal import ConformalMap
from wbergman.weights import (
    WeightSpec,
    check_condition_41,
    check_condition_42,
    check_integrability,
    check_volberg,
)


def test_bounded_ratio_constant_weight(const_weight):
    """The ratios of the constant weight are bounded by 1/4."""
    report = check_condition_41(const_weight, 40)
    assert report.verdict == "bounded-observed"
    assert report.passed
    assert report.values["sup"] == pytest.approx(0.25, abs=1e-10)
    assert report.table["M"].size == 41


def test_bounded_ratio_power_weight(sqrt_weight):
    """Power weights of exponent 1/2 have bounded ratios."""
    report = check_condition_41(sqrt_weight, 200)
    assert report.verdict == "bounded-observed"
    assert report.values["sup"] < math.pi / 8 * 1.05


@pytest.mark.parametrize(
    "weight", [WeightSpec.double_exponential(), WeightSpec.power(1)]
)
def test_bounded_ratio_divergent(weight):
    """Infinite inverse moments make the ratios divergent."""
    report = check_condition_41(weight, 10)
    assert report.verdict == "divergent"
    assert not report.passed
    assert report.values["first_divergent_index"] == 0


def test_bounded_ratio_invalid_index(const_weight):
    """At least two ratios are required."""
    with pytest.raises(ValueError):
        check_condition_41(const_weight, 0)


@pytest.mark.parametrize(
    "weight",
    [WeightSpec.constant(), WeightSpec.power(0.5), WeightSpec.power(-0.5, 3.0)],
)
def test_lower_bound(weight):
    """M_k >= 1/4 holds for every weight."""
    report = check_condition_42(weight, 30)
    assert report.verdict == "pass"
    assert report.passed
    assert report.values["min"] >= 0.25 - report.values["epsilon"]


def test_lower_bound_sawtooth_table():
    """A tabulated sawtooth weight satisfies M_k >= 1/4 as well."""
    knots = np.linspace(0.05, 1.0, 20)
    values = np.where(np.arange(20) % 2, 2.0, 0.5)
    report = check_condition_42(WeightSpec.tabulated(knots, values), 50)
    assert report.verdict == "pass"
    assert report.values["min"] >= 0.25 - report.values["epsilon"]


def test_lower_bound_not_applicable():
    """The lower bound does not apply when inverse moments diverge."""
    report = check_condition_42(WeightSpec.double_exponential(), 5)
    assert report.verdict == "not-applicable"
    assert report.passed


def test_loglog_constant_weight(const_weight):
    """log log(1/omega) is undefined for the constant weight 1."""
    report = check_volberg(const_weight)
    assert report.verdict == "undefined"
    assert len(report.values["undefined_points"]) == 30


def test_loglog_power_weight(sqrt_weight):
    """t log(1/omega(t)) decreases toward 0 for power weights."""
    report = check_volberg(sqrt_weight)
    assert report.verdict == "fails-monotonicity"
    assert not report.values["monotonic"]


def test_loglog_double_exponential():
    """The double exponential weight is consistent with the log-log condition."""
    report = check_volberg(WeightSpec.double_exponential())
    assert report.verdict == "consistent-with-condition"
    assert report.passed
    assert report.values["monotonic"]
    assert np.all(np.isfinite(report.table["loglog_inverse"].values))


def test_loglog_custom_samples():
    """Samples must be strictly decreasing in (0, 1]."""
    weight = WeightSpec.double_exponential()
    report = check_volberg(weight, [0.5, 0.25, 0.125, 0.0625])
    assert report.table["t"].size == 4
    with pytest.raises(ValueError):
        check_volberg(weight, [0.25, 0.5, 0.125])
    with pytest.raises(ValueError):
        check_volberg(weight, [0.5, 0.25])


def test_integrability_disk(const_weight, sqrt_weight):
    """Weighted areas of the disk."""
    assert check_integrability(const_weight) == pytest.approx(math.pi, rel=1e-7)
    # 2 pi * int_0^1 (1 - t) t**(1/2) dt
    expected = 2 * math.pi * (2 / 3 - 2 / 5)
    assert check_integrability(sqrt_weight) == pytest.approx(expected, rel=1e-7)


def test_integrability_polynomial_map(const_weight, poly_map):
    """The weighted area of a polynomial image with a constant weight."""
    area = check_integrability(const_weight, poly_map)
    assert area == pytest.approx(1.125 * math.pi, rel=1e-7)


def test_not_integrable():
    """1/t is not integrable near the boundary."""
    assert math.isinf(check_integrability(WeightSpec.power(-1)))
    assert math.isinf(
        check_integrability(WeightSpec.power(-1), ConformalMap.moebius_rescale(0.3))
    )
