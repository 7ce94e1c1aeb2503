"""Smooth functions on [0, 1] in a Chebyshev collocation basis.

A :class:`ChebFn` stores the coefficients of a polynomial interpolant
through the Chebyshev-Lobatto points mapped to [0, 1].  For analytic
functions the representation converges geometrically in the degree, so
a moderate default degree (128) already saturates double precision.
Evaluation uses the Clenshaw recurrence, integration and
differentiation act exactly on the coefficient space.

All objects are immutable values; every operation returns a new
function.  This makes concurrent read access safe without locking.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import numpy.polynomial.chebyshev as ncheb

DEFAULT_DEGREE = 128

# uniform grid used for sup-norm estimates (diagnostics only)
SUP_NORM_GRID = 2049


def chebyshev_nodes(degree):
    """Ascending Chebyshev-Lobatto points on [0, 1], endpoints included."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if degree == 0:
        return np.array([0.5])
    j = np.arange(degree + 1)
    return (1.0 - np.cos(np.pi * j / degree)) / 2.0


@lru_cache(maxsize=32)
def values_to_coeffs_matrix(degree):
    """Matrix mapping node values to Chebyshev coefficients.

    Discrete cosine transform written out as a dense matrix; at the
    degrees used here (a few hundred at most) this is both fast and
    exactly consistent with :func:`coeffs_to_values_matrix`.
    """
    n = degree
    if n == 0:
        out = np.array([[1.0]])
    else:
        k = np.arange(n + 1)
        i = np.arange(n + 1)
        p = np.ones(n + 1)
        p[0] = p[-1] = 2.0
        S = (2.0 / (np.outer(p, p) * n)) * np.cos(np.outer(k, i) * np.pi / n)
        # our nodes ascend in x, the classical ones descend in cos(theta)
        out = S[:, ::-1].copy()
    out.setflags(write=False)
    return out


@lru_cache(maxsize=32)
def coeffs_to_values_matrix(degree):
    """Chebyshev Vandermonde matrix at the collocation nodes."""
    out = ncheb.chebvander(2.0 * chebyshev_nodes(degree) - 1.0, degree)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=32)
def integral_row(degree):
    """Row functional c -> integral over [0, 1] of sum_k c_k T_k(2x-1)."""
    k = np.arange(degree + 1)
    row = np.zeros(degree + 1)
    even = k % 2 == 0
    row[even] = 1.0 / (1.0 - k[even] ** 2)
    row.setflags(write=False)
    return row


@lru_cache(maxsize=32)
def quadrature_weights(degree):
    """Clenshaw-Curtis weights: q @ values == integral, exact on the basis."""
    out = integral_row(degree) @ values_to_coeffs_matrix(degree)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=32)
def derivative_coeff_matrix(degree):
    """Coefficient-space d/dx, padded to square (degree drops by one)."""
    n = degree
    D = np.zeros((n + 1, n + 1))
    for j in range(n + 1):
        e = np.zeros(n + 1)
        e[j] = 1.0
        d = 2.0 * ncheb.chebder(e)  # chain rule for t = 2x - 1
        D[: len(d), j] = d
    D.setflags(write=False)
    return D


def _check_domain(x):
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError(f"argument outside [0, 1]: {x!r}")
    return arr


class ChebFn:
    """Polynomial interpolant on [0, 1] in the Chebyshev basis T_k(2x - 1)."""

    __slots__ = ("_coeffs", "_values")

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficient array must be one-dimensional and non-empty")
        if not np.all(np.isfinite(c)):
            raise ValueError("non-finite coefficient")
        c.setflags(write=False)
        self._coeffs = c
        self._values = None

    @classmethod
    def from_callable(cls, f, degree=DEFAULT_DEGREE):
        """Interpolate ``f`` at the degree + 1 collocation nodes."""
        xs = chebyshev_nodes(degree)
        vals = np.array([float(f(x)) for x in xs])
        bad = ~np.isfinite(vals)
        if np.any(bad):
            raise ValueError(f"non-finite sample value at node x = {float(xs[bad][0])!r}")
        return cls.from_values(vals)

    @classmethod
    def from_values(cls, values):
        """Build the interpolant through values at the collocation nodes."""
        v = np.asarray(values, dtype=float)
        if v.ndim != 1 or v.size == 0:
            raise ValueError("value array must be one-dimensional and non-empty")
        if not np.all(np.isfinite(v)):
            raise ValueError("non-finite node value")
        return cls(values_to_coeffs_matrix(v.size - 1) @ v)

    @classmethod
    def constant(cls, value, degree=0):
        c = np.zeros(degree + 1)
        c[0] = float(value)
        return cls(c)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return self._coeffs.size - 1

    @property
    def values(self):
        """Values at the collocation nodes (cached)."""
        if self._values is None:
            v = coeffs_to_values_matrix(self.degree) @ self._coeffs
            v.setflags(write=False)
            self._values = v
        return self._values

    def __call__(self, x):
        arr = _check_domain(x)
        out = ncheb.chebval(2.0 * arr - 1.0, self._coeffs)
        return float(out) if np.isscalar(x) or arr.ndim == 0 else out

    def eval(self, x):
        return self(x)

    def integrate(self):
        """Integral over [0, 1], exact on the polynomial space."""
        return float(integral_row(self.degree) @ self._coeffs)

    def integrate_on(self, lo, hi):
        """Integral over [lo, hi] via the coefficient antiderivative."""
        if not (0.0 <= lo <= hi <= 1.0):
            raise ValueError(f"invalid integration bounds [{lo!r}, {hi!r}]")
        anti = 0.5 * ncheb.chebint(self._coeffs)  # dx = dt / 2
        return float(
            ncheb.chebval(2.0 * hi - 1.0, anti) - ncheb.chebval(2.0 * lo - 1.0, anti)
        )

    def derivative(self):
        """d/dx as a new ChebFn of degree max(degree - 1, 0)."""
        if self.degree == 0:
            return ChebFn([0.0])
        return ChebFn(2.0 * ncheb.chebder(self._coeffs))

    # small amount of arithmetic keeps perturbation code readable
    def __add__(self, other):
        if not isinstance(other, ChebFn):
            return NotImplemented
        return linear_combo([(1.0, self), (1.0, other)])

    def __sub__(self, other):
        if not isinstance(other, ChebFn):
            return NotImplemented
        return linear_combo([(1.0, self), (-1.0, other)])

    def __mul__(self, scalar):
        if not np.isscalar(scalar):
            return NotImplemented
        return ChebFn(float(scalar) * self._coeffs)

    __rmul__ = __mul__

    def __neg__(self):
        return ChebFn(-self._coeffs)

    def __repr__(self):
        return f"ChebFn(degree={self.degree})"


def linear_combo(terms):
    """Weighted sum of ChebFns; result degree is the maximum input degree."""
    terms = list(terms)
    if not terms:
        raise ValueError("empty linear combination")
    deg = max(f.degree for _, f in terms)
    c = np.zeros(deg + 1)
    for a, f in terms:
        c[: f.degree + 1] += float(a) * f.coeffs
    return ChebFn(c)


def norm_sup(f):
    """Sup norm estimated on a uniform grid of SUP_NORM_GRID points."""
    return float(np.max(np.abs(f(np.linspace(0.0, 1.0, SUP_NORM_GRID)))))


def norm_cl(f, l):
    """C^l norm: sum of sup norms of derivatives of order 0..l."""
    if l < 0:
        raise ValueError("derivative order must be non-negative")
    if l > f.degree:
        raise ValueError(f"order {l} exceeds representation degree {f.degree}")
    total = 0.0
    g = f
    for _ in range(l + 1):
        total += norm_sup(g)
        g = g.derivative()
    return total
