# -----------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Pytest fixtures.

"""
import numpy as np
import pytest
import toml

from wbergman.conformal import ConformalMap
from wbergman.weights import WeightSpec


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so that randomized checks are reproducible."""
    return np.random.default_rng(20240917)


@pytest.fixture
def const_weight() -> WeightSpec:
    return WeightSpec.constant()


@pytest.fixture
def sqrt_weight() -> WeightSpec:
    return WeightSpec.power(0.5)


@pytest.fixture
def inv_sqrt_weight() -> WeightSpec:
    return WeightSpec.power(-0.5)


@pytest.fixture
def identity_map() -> ConformalMap:
    return ConformalMap.identity()


@pytest.fixture
def poly_map() -> ConformalMap:
    """Univalent map z + z**2 / 4 of the unit disk."""
    return ConformalMap.polynomial([1, 0.25])


@pytest.fixture
def weight_table(tmp_path):
    """Tabulated weight stored with a comment line and a comma delimiter."""
    path = tmp_path / "weight.csv"
    path.write_text(
        "# sampled weight\n"
        "t, omega\n"
        "0.1, 0.5\n"
        "0.5, 1.0\n"
        "1.0, 2.0\n"
    )
    yield path


@pytest.fixture
def config_file(tmp_path):
    """Run configuration stored in a [run] table."""
    path = tmp_path / "run.toml"
    with open(path, "w") as f:
        toml.dump({"run": {"weight": "pow:0.5", "kmax": 3, "format": "json"}}, f)
    yield path
