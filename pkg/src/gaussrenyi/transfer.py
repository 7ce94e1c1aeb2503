"""Transfer operators of the Gauss and Renyi maps and their mixtures.

The transfer operator of an interval map with inverse branches V_a acts
on densities by

    (L f)(y) = sum_a |V_a'(y)| f(V_a(y)),

here with branches V_a(y) = 1/(a+y) (Gauss) or 1 - 1/(a+y) (Renyi) and
weight 1/(a+y)^2 in both cases.  The countable branch sum is split into
an explicit part a <= a_max and a tail resummed through a Taylor
expansion of f at the branch accumulation point (x = 0 for Gauss,
x = 1 for Renyi); the tail coefficient sums collapse to Hurwitz zeta
values zeta(s, a_max + 1 + y).

Discretization collocates the operator on the Chebyshev-Lobatto nodes,
giving a dense matrix acting on node values.  A rank-one correction in
the constant direction restores exact mass conservation (q @ M == q for
the quadrature weights q), which the Taylor tail alone cannot provide
uniformly over the polynomial space; the correction moves node values
by at most the tail-model mass deficit, so it stays within the reported
tail error bound.

The annealed operator of the random system choosing Gauss with
probability 1 - eps and Renyi with probability eps is the convex
mixture (1 - eps) L0 + eps L1.  Its fixed density is found by power
iteration (the spectral gap makes this geometric) and the resolvent
(I - L)^(-1) on zero-mean functions is realized as a bordered linear
solve that enforces the mean constraint exactly.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import numpy.polynomial.chebyshev as ncheb

from .bounds import eps_max
from .funcspace import (
    ChebFn,
    chebyshev_nodes,
    derivative_coeff_matrix,
    norm_sup,
    quadrature_weights,
    values_to_coeffs_matrix,
)
from .maps import MapKind

_HURWITZ_TERMS = 100000

# admissible mixture range reported for the default smoothness index
_EPS_ADMISSIBLE = eps_max(2)

_POWER_ITER_CAP = 10000
_POWER_ITER_TOL = 1e-13
_RESIDUAL_LIMIT = 1e-12
_NEGATIVE_LIMIT = -1e-10


class TailBoundWarning(UserWarning):
    """Raised through the warning channel when a tail error bound is large."""


class ConvergenceError(RuntimeError):
    """A numerical iteration or solve failed to meet its contract."""


@dataclass(frozen=True)
class TailPolicy:
    """Branch cutoff and Taylor order of the tail resummation."""

    a_max: int = 256
    taylor_order: int = 3

    def __post_init__(self):
        if self.a_max < 8:
            raise ValueError(f"a_max must be at least 8: {self.a_max!r}")
        if not 0 <= self.taylor_order <= 4:
            raise ValueError(f"taylor_order must be in 0..4: {self.taylor_order!r}")


@dataclass(frozen=True)
class OperatorMatrix:
    """Collocation matrix of a transfer operator acting on node values."""

    entries: np.ndarray
    degree: int
    kind_label: str
    eps: float | None = None

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=float)
        n = self.degree + 1
        if e.shape != (n, n):
            raise ValueError(f"entries must be {n} x {n}, got {e.shape}")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)


def hurwitz_zeta(s, q, terms=_HURWITZ_TERMS):
    """zeta(s, q) = sum_{a >= 0} (a + q)^(-s) by direct summation.

    The truncated sum is completed with the integral of the summand and
    the trapezoidal half-term, which leaves an error far below double
    rounding for s >= 2 and q >= 1.
    """
    if s <= 1:
        raise ValueError(f"exponent must exceed 1: {s!r}")
    qa = np.asarray(q, dtype=float)
    if np.any(qa <= 0):
        raise ValueError("offset must be positive")
    a = np.arange(terms, dtype=float)
    out = np.sum((a[:, None] + qa.ravel()[None, :]) ** (-float(s)), axis=0)
    qn = qa.ravel() + terms
    out += qn ** (1.0 - s) / (s - 1.0) + 0.5 * qn ** (-float(s))
    out = out.reshape(qa.shape)
    return float(out) if np.isscalar(q) else out


@lru_cache(maxsize=16)
def _tail_zetas(a_max, degree, m):
    """zeta(t + 2, a_max + 1 + nodes) for t = 0..m, shape (m+1, degree+1).

    Chunked multiplicative accumulation; equivalent to hurwitz_zeta at
    each exponent but an order of magnitude faster.
    """
    q = a_max + 1.0 + chebyshev_nodes(degree)
    sums = np.zeros((m + 1, q.size))
    chunk = 20000
    for start in range(0, _HURWITZ_TERMS, chunk):
        a = np.arange(start, min(start + chunk, _HURWITZ_TERMS), dtype=float)
        base = 1.0 / (a[:, None] + q[None, :])
        p = base * base
        for t in range(m + 1):
            sums[t] += p.sum(axis=0)
            p = p * base
    qn = q + _HURWITZ_TERMS
    for t in range(m + 1):
        s = t + 2.0
        sums[t] += qn ** (1.0 - s) / (s - 1.0) + 0.5 * qn ** (-s)
    sums.setflags(write=False)
    return sums


@lru_cache(maxsize=16)
def _branch_points(kind, degree, a_max):
    """Pulled-back nodes V_a(y) and weights 1/(a+y)^2 for a = 1..a_max."""
    y = chebyshev_nodes(degree)
    a = np.arange(1, a_max + 1, dtype=float)[:, None]
    w = 1.0 / (a + y[None, :]) ** 2
    if kind is MapKind.GAUSS:
        pts = 1.0 / (a + y[None, :])
    else:
        pts = 1.0 - 1.0 / (a + y[None, :])
    pts.setflags(write=False)
    w.setflags(write=False)
    return pts, w


@lru_cache(maxsize=16)
def _tail_block(kind, degree, a_max, m):
    """Tail operator on node values: rank m+1, built from endpoint jets."""
    xstar = 0.0 if kind is MapKind.GAUSS else 1.0
    sign = 1.0 if kind is MapKind.GAUSS else -1.0
    C = values_to_coeffs_matrix(degree)
    Dc = derivative_coeff_matrix(degree)
    estar = ncheb.chebvander(np.array([2.0 * xstar - 1.0]), degree)[0]
    zetas = _tail_zetas(a_max, degree, m)
    T = np.zeros((degree + 1, degree + 1))
    P = np.eye(degree + 1)
    fact = 1.0
    for t in range(m + 1):
        if t > 0:
            P = Dc @ P
            fact *= t
        jet_row = estar @ P @ C  # node values -> f^(t)(xstar)
        T += np.outer(sign**t / fact * zetas[t], jet_row)
    T.setflags(write=False)
    return T


@lru_cache(maxsize=16)
def _branch_matrix(kind, degree, a_max):
    """Explicit-branch part of the collocation matrix."""
    pts, w = _branch_points(kind, degree, a_max)
    n = degree + 1
    V = ncheb.chebvander(2.0 * pts.ravel() - 1.0, degree).reshape(a_max, n, n)
    B = np.einsum("ai,aij->ij", w, V) @ values_to_coeffs_matrix(degree)
    B.setflags(write=False)
    return B


def tail_error_bound(f, policy=None):
    """Bound on the tail-model error for f: zeta(m+3, a_max+1) sup|f^(m+1)| / (m+1)!."""
    policy = policy if policy is not None else TailPolicy()
    m = policy.taylor_order
    g = f
    fact = 1.0
    for t in range(1, m + 2):
        g = g.derivative()
        fact *= t
    return hurwitz_zeta(m + 3, policy.a_max + 1.0) * norm_sup(g) / fact


def _check_kind(kind):
    if kind not in (MapKind.GAUSS, MapKind.RENYI):
        raise TypeError(f"not a MapKind: {kind!r}")


def apply_transfer(kind, f, policy=None):
    """Apply the transfer operator of one map to a ChebFn.

    Parameters
    ----------
    kind : MapKind
        Which map's operator to apply.
    f : ChebFn
        Input density (any smooth function works; mass is conserved).
    policy : TailPolicy, optional
        Branch cutoff and Taylor order of the tail resummation.

    Returns
    -------
    ChebFn interpolating the image at the collocation nodes.  The tail
    error bound is checked and a TailBoundWarning is emitted when it
    exceeds 1e-8.
    """
    _check_kind(kind)
    policy = policy if policy is not None else TailPolicy()
    pts, w = _branch_points(kind, f.degree, policy.a_max)
    vals = ncheb.chebval(2.0 * pts - 1.0, f.coeffs)
    g = np.einsum("ai,ai->i", w, vals)
    g = g + _tail_block(kind, f.degree, policy.a_max, policy.taylor_order) @ f.values
    # rank-one mass restoration, within the tail error bound
    q = quadrature_weights(f.degree)
    g = g + (f.integrate() - float(q @ g))
    bound = tail_error_bound(f, policy)
    if bound > 1e-8:
        warnings.warn(
            f"tail error bound {bound:.3e} exceeds 1e-8; "
            f"increase a_max or taylor_order",
            TailBoundWarning,
            stacklevel=2,
        )
    return ChebFn.from_values(g)


def assemble_operator(kind, degree=128, policy=None):
    """Collocation matrix of the transfer operator at the given degree.

    Column j holds the node values of the operator applied to the j-th
    nodal cardinal function; the assembly uses the same branch and tail
    blocks as :func:`apply_transfer`, plus the rank-one mass fix, so the
    two code paths agree to rounding.
    """
    _check_kind(kind)
    if degree < 8:
        raise ValueError(f"degree must be at least 8: {degree!r}")
    policy = policy if policy is not None else TailPolicy()
    M = _branch_matrix(kind, degree, policy.a_max) + _tail_block(
        kind, degree, policy.a_max, policy.taylor_order
    )
    q = quadrature_weights(degree)
    M = M + np.outer(np.ones(degree + 1), q - q @ M)
    label = "L0" if kind is MapKind.GAUSS else "L1"
    return OperatorMatrix(M, degree, label)


def annealed(eps, m0, m1):
    """Convex mixture (1 - eps) m0 + eps m1 of two operator matrices."""
    if m0.degree != m1.degree:
        raise ValueError(f"degree mismatch: {m0.degree} vs {m1.degree}")
    if not 0.0 <= eps <= 1.0:
        warnings.warn(f"mixture weight {eps!r} outside [0, 1]", stacklevel=2)
    entries = (1.0 - eps) * m0.entries + eps * m1.entries
    return OperatorMatrix(entries, m0.degree, f"annealed({eps:g})", eps=float(eps))


def invariant_density(m):
    """Fixed density of an operator matrix, normalized to unit mass.

    Power iteration with quadrature renormalization at every step; the
    spectral gap of the mixture makes convergence geometric.  Raises
    ConvergenceError when the iteration cap is hit or the final
    fixed-point residual exceeds 1e-12.
    """
    q = quadrature_weights(m.degree)
    if m.eps is not None and not 0.0 <= m.eps <= _EPS_ADMISSIBLE:
        warnings.warn(
            f"mixture weight {m.eps!r} outside the admissible range "
            f"[0, {_EPS_ADMISSIBLE:.6f}]; the fixed density may not exist",
            stacklevel=2,
        )
    v = np.ones(m.degree + 1)
    for _ in range(_POWER_ITER_CAP):
        w = m.entries @ v
        w = w / float(q @ w)
        diff = float(np.max(np.abs(w - v)))
        v = w
        if diff < _POWER_ITER_TOL:
            break
    else:
        res = float(np.max(np.abs(m.entries @ v - v)))
        raise ConvergenceError(
            f"power iteration did not converge in {_POWER_ITER_CAP} steps; "
            f"last residual {res:.3e}"
        )
    res = float(np.max(np.abs(m.entries @ v - v)))
    if res > _RESIDUAL_LIMIT:
        raise ConvergenceError(f"fixed-point residual {res:.3e} exceeds 1e-12")
    small_negative = (v < 0.0) & (v >= _NEGATIVE_LIMIT)
    if np.any(small_negative):
        warnings.warn(
            f"clamped {int(np.sum(small_negative))} node values in "
            f"[{_NEGATIVE_LIMIT:g}, 0) to zero (max magnitude "
            f"{float(-v[small_negative].min()):.3e})",
            stacklevel=2,
        )
        v = np.where(small_negative, 0.0, v)
    h = ChebFn.from_values(v)
    grid_min = float(np.min(h(np.linspace(0.0, 1.0, 2049))))
    if grid_min < _NEGATIVE_LIMIT:
        raise ConvergenceError(f"density dips to {grid_min:.3e} on the grid")
    return h


def resolvent_solve(m, g):
    """Solve (I - m) u = g on the zero-mean subspace.

    The singular system is augmented with the quadrature row and a
    constant column; for zero-mean g the bordered solve returns the
    unique solution with zero mean.  Preconditions: |integral of g|
    below 1e-10.
    """
    mean = g.integrate()
    if abs(mean) > 1e-10:
        raise ValueError(f"right-hand side must have zero mean, got {mean:.3e}")
    n = m.degree + 1
    q = quadrature_weights(m.degree)
    B = np.zeros((n + 1, n + 1))
    B[:n, :n] = np.eye(n) - m.entries
    B[:n, n] = 1.0
    B[n, :n] = q
    rhs = np.concatenate([np.asarray(g.values), [0.0]])
    sol = np.linalg.solve(B, rhs)
    u = sol[:n]
    res = float(np.max(np.abs((np.eye(n) - m.entries) @ u - g.values)))
    if res > 1e-9:
        raise ConvergenceError(f"resolvent residual {res:.3e} exceeds 1e-9")
    return ChebFn.from_values(u)
