"""Shared fixtures: operator pairs and series are expensive, build once."""

import numpy as np
import pytest

from gaussrenyi import (
    MapKind,
    assemble_operator,
    invariant_density,
    mixture_series,
)


@pytest.fixture(scope="session")
def ops128():
    m0 = assemble_operator(MapKind.GAUSS, 128)
    m1 = assemble_operator(MapKind.RENYI, 128)
    return m0, m1


@pytest.fixture(scope="session")
def ops32():
    m0 = assemble_operator(MapKind.GAUSS, 32)
    m1 = assemble_operator(MapKind.RENYI, 32)
    return m0, m1


@pytest.fixture(scope="session")
def h0_128(ops128):
    return invariant_density(ops128[0])


@pytest.fixture(scope="session")
def series3(ops128, h0_128):
    m0, m1 = ops128
    return mixture_series(h0_128, m0, m1, 3)


@pytest.fixture(scope="session")
def series2(series3):
    from gaussrenyi import PerturbationSeries

    return PerturbationSeries(series3.h0, series3.coeffs[:2], 2)


def random_smooth_fn(rng, degree=64, decay=0.6):
    """Random ChebFn with geometrically decaying coefficients."""
    from gaussrenyi import ChebFn

    coeffs = rng.standard_normal(degree + 1) * decay ** np.arange(degree + 1)
    return ChebFn(coeffs)
