"""Transfer operator application, discretization, fixed point, resolvent."""

import math
import warnings

import numpy as np
import pytest
from scipy import special

from gaussrenyi import (
    ChebFn,
    ConvergenceError,
    MapKind,
    OperatorMatrix,
    TailBoundWarning,
    TailPolicy,
    annealed,
    apply_transfer,
    assemble_operator,
    hurwitz_zeta,
    invariant_density,
    norm_sup,
    quadrature_weights,
    resolvent_solve,
    tail_error_bound,
)
from gaussrenyi.funcspace import chebyshev_nodes

from conftest import random_smooth_fn

LN2 = math.log(2.0)


def gauss_density_fn(degree=128):
    return ChebFn.from_callable(lambda x: 1.0 / ((1.0 + x) * LN2), degree)


def zero_mean(f):
    return f - ChebFn.constant(f.integrate(), degree=0) * 1.0


# ---------------------------------------------------------------- zeta


def test_hurwitz_zeta_against_scipy():
    for s in (2, 3, 4, 6):
        for q in (9.0, 257.0, 1000.5):
            assert abs(hurwitz_zeta(s, q) - special.zeta(s, q)) < 1e-13
    qs = np.array([9.0, 20.0, 400.0])
    assert np.max(np.abs(hurwitz_zeta(3, qs) - special.zeta(3, qs))) < 1e-14


def test_hurwitz_zeta_validation():
    with pytest.raises(ValueError):
        hurwitz_zeta(1.0, 5.0)
    with pytest.raises(ValueError):
        hurwitz_zeta(3.0, -1.0)


def test_tail_policy_validation():
    with pytest.raises(ValueError):
        TailPolicy(a_max=4)
    with pytest.raises(ValueError):
        TailPolicy(taylor_order=5)


# ------------------------------------------------------- apply_transfer


def test_gauss_density_is_fixed():
    h0 = gauss_density_fn()
    image = apply_transfer(MapKind.GAUSS, h0)
    assert norm_sup(image - h0) < 1e-10


def test_transfer_of_one_is_trigamma():
    one = ChebFn.from_callable(lambda x: 1.0, 32)
    g = apply_transfer(MapKind.GAUSS, one)
    # brute-force branch sum with the analytic remainder of the series
    a = np.arange(1, 10**6 + 1, dtype=float)
    brute0 = float(np.sum(1.0 / a**2))
    assert abs(brute0 - math.pi**2 / 6) < 2e-6
    assert abs(g(0.0) - math.pi**2 / 6) < 1e-10
    ys = chebyshev_nodes(32)
    assert np.max(np.abs(g(ys) - special.polygamma(1, 1.0 + ys))) < 1e-12


def test_mass_conservation_random_functions():
    rng = np.random.default_rng(23)
    for kind in (MapKind.GAUSS, MapKind.RENYI):
        for _ in range(10):
            f = random_smooth_fn(rng, degree=64)
            # rescale to the documented example mass 0.7
            f = f - ChebFn.constant(f.integrate() - 0.7)
            g = apply_transfer(kind, f)
            bound = tail_error_bound(f)
            assert abs(g.integrate() - f.integrate()) < bound + 1e-12


def test_positivity():
    rng = np.random.default_rng(29)
    for kind in (MapKind.GAUSS, MapKind.RENYI):
        for fcall in (lambda x: math.exp(-x), lambda x: 1.0 + math.sin(3 * x) ** 2):
            f = ChebFn.from_callable(fcall, 64)
            g = apply_transfer(kind, f)
            bound = tail_error_bound(f)
            assert np.min(g.values) > -bound - 1e-13


def test_tail_bound_warning():
    rough = ChebFn.from_callable(lambda x: math.cos(40 * math.pi * x), 128)
    with pytest.warns(TailBoundWarning):
        apply_transfer(MapKind.GAUSS, rough)


# ------------------------------------------------------ assemble_operator


@pytest.mark.parametrize("kind", [MapKind.GAUSS, MapKind.RENYI])
def test_quadrature_row(kind, ops32, ops128):
    for degree, ops in ((32, ops32), (128, ops128)):
        m = ops[0 if kind is MapKind.GAUSS else 1]
        q = quadrature_weights(degree)
        assert np.max(np.abs(q @ m.entries - q)) < 1e-10


def test_matrix_fixed_point_degree32():
    m = assemble_operator(MapKind.GAUSS, 32)
    h0 = gauss_density_fn(32)
    assert np.max(np.abs(m.entries @ h0.values - h0.values)) < 1e-9


def test_matrix_agrees_with_apply(ops128):
    m0, m1 = ops128
    rng = np.random.default_rng(31)
    for _ in range(20):
        f = ChebFn(rng.standard_normal(129) * 0.7 ** np.arange(129))
        for kind, m in ((MapKind.GAUSS, m0), (MapKind.RENYI, m1)):
            with warnings.catch_warnings():
                # rough draws legitimately trip the tail diagnostic
                warnings.simplefilter("ignore", TailBoundWarning)
                direct = apply_transfer(kind, f)
            via_matrix = m.entries @ f.values
            assert np.max(np.abs(via_matrix - direct.values)) < 1e-11


def test_assemble_validation():
    with pytest.raises(ValueError):
        assemble_operator(MapKind.GAUSS, 4)
    with pytest.raises(ValueError):
        OperatorMatrix(np.zeros((3, 4)), 2, "L0")


# ------------------------------------------------------------- annealed


def test_annealed_endpoints(ops32):
    m0, m1 = ops32
    assert np.array_equal(annealed(0.0, m0, m1).entries, m0.entries)
    assert np.array_equal(annealed(1.0, m0, m1).entries, m1.entries)
    mid = annealed(0.5, m0, m1)
    assert np.allclose(mid.entries, 0.5 * (m0.entries + m1.entries), atol=0)
    assert mid.eps == 0.5


def test_annealed_degree_mismatch(ops32, ops128):
    with pytest.raises(ValueError):
        annealed(0.1, ops32[0], ops128[1])


def test_annealed_out_of_range_warns(ops32):
    with pytest.warns(UserWarning, match="outside"):
        annealed(-0.001, *ops32)


# ----------------------------------------------------- invariant_density


def test_invariant_density_gauss(ops128):
    h = invariant_density(ops128[0])
    exact = gauss_density_fn()
    assert norm_sup(h - exact) < 1e-10
    assert abs(h.integrate() - 1.0) < 1e-12


def test_invariant_density_annealed(ops128, series3):
    m0, m1 = ops128
    m = annealed(0.05, m0, m1)
    h = invariant_density(m)
    assert abs(h.integrate() - 1.0) < 1e-12
    assert np.max(np.abs(m.entries @ h.values - h.values)) < 1e-12
    # cross-module consistency with the order-3 expansion
    assert norm_sup(h - series3.at(0.05)) < 3 * 0.05**4


def test_invariant_density_warns_outside_admissible(ops32):
    m = annealed(0.85, *ops32)
    with pytest.warns(UserWarning, match="admissible"):
        invariant_density(m)


def test_invariant_density_rejects_bad_operator():
    # the negated identity has no fixed density; the iteration settles
    # on a point whose residual violates the contract
    bad = OperatorMatrix(-np.eye(9), 8, "L0")
    with pytest.raises(ConvergenceError):
        invariant_density(bad)


def test_invariant_density_continuity(ops128):
    m0, m1 = ops128
    for eps in (0.0, 0.1, 0.2):
        h1 = invariant_density(annealed(eps, m0, m1))
        h2 = invariant_density(annealed(eps + 1e-6, m0, m1))
        assert norm_sup(h1 - h2) < 1e-4


# ------------------------------------------------------- resolvent_solve


def test_resolvent_zero(ops128):
    u = resolvent_solve(ops128[0], ChebFn(np.zeros(129)))
    assert norm_sup(u) == 0.0


def test_resolvent_first_order_response(ops128, h0_128):
    m0, m1 = ops128
    g1 = ChebFn.from_values(m1.entries @ h0_128.values - h0_128.values)
    u = resolvent_solve(m0, g1)
    n = m0.degree + 1
    res = (np.eye(n) - m0.entries) @ u.values - g1.values
    assert np.max(np.abs(res)) < 1e-9
    assert abs(u.integrate()) < 1e-10


def test_resolvent_random_and_neumann(ops128):
    m0, _ = ops128
    rng = np.random.default_rng(37)
    n = m0.degree + 1
    eye = np.eye(n)
    for _ in range(20):
        g = zero_mean(random_smooth_fn(rng, degree=128))
        u = resolvent_solve(m0, g)
        assert np.max(np.abs((eye - m0.entries) @ u.values - g.values)) < 1e-9
        assert abs(u.integrate()) < 1e-10
        # Neumann series sum_k L0^k g, truncated once increments are tiny
        acc = np.array(g.values)
        term = np.array(g.values)
        for _ in range(2000):
            term = m0.entries @ term
            acc += term
            if np.max(np.abs(term)) < 1e-11:
                break
        assert np.max(np.abs(acc - u.values)) < 1e-8


def test_resolvent_mean_precondition(ops128):
    with pytest.raises(ValueError, match="zero mean"):
        resolvent_solve(ops128[0], ChebFn.constant(0.3, degree=128))
