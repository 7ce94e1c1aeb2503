"""Taylor expansion of the stationary density in the mixture weight.

Write L_eps = (1 - eps) L0 + eps L1 for the annealed operator and h_eps
for its stationary density.  The expansion

    h_eps = h0 + sum_n eps^n c_n + o(eps^k)

has coefficients built from two ingredients: the forcing terms, the
eps-derivatives of eps -> L_eps h0 at 0, and resolvent responses on the
zero-mean subspace.  Because the family is affine in eps the resolvent
derivatives collapse to the geometric recursion

    d^j/deps^j (I - L_eps)^(-1) |_0 = j! [(I - L0)^(-1) (L1 - L0)]^j (I - L0)^(-1)

and the coefficients to c_n = [(I - L0)^(-1) (L1 - L0)]^(n-1) (I - L0)^(-1) (L1 h0 - h0).

Both the direct recursion (:func:`mixture_series`) and the generic
recombination through forcing terms and the response table are
provided; they agree to rounding and the finite-difference checks in
the test suite validate the resolvent-derivative identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .funcspace import ChebFn, linear_combo
from .transfer import resolvent_solve


@dataclass(frozen=True)
class PerturbationSeries:
    """Base density plus Taylor coefficients c_1..c_k of eps -> h_eps."""

    h0: ChebFn
    coeffs: tuple
    order: int

    def __post_init__(self):
        if len(self.coeffs) != self.order:
            raise ValueError(
                f"order {self.order} does not match {len(self.coeffs)} coefficients"
            )

    def at(self, eps):
        """Evaluate the truncated expansion at a mixture weight eps."""
        if eps < 0.0:
            raise ValueError(f"mixture weight must be non-negative: {eps!r}")
        terms = [(1.0, self.h0)]
        terms += [(eps ** (n + 1), c) for n, c in enumerate(self.coeffs)]
        return linear_combo(terms)


def evaluate_series(series, eps):
    return series.at(eps)


def mixture_forcing_terms(h0, m1, order):
    """Derivatives of eps -> L_eps h0 at eps = 0 for the affine mixture.

    The first derivative is L1 h0 - h0 and all higher ones vanish.  The
    first term must have zero mean (both L1 h0 and h0 carry unit mass);
    a violation signals an inconsistent h0 or operator.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    g1_values = m1.entries @ h0.values - h0.values
    g1 = ChebFn.from_values(g1_values)
    mean = g1.integrate()
    if abs(mean) > 1e-9:
        raise RuntimeError(
            f"first forcing term has mean {mean:.3e}; "
            f"h0 is not the fixed density of the complementary operator"
        )
    zero = ChebFn(np.zeros(h0.degree + 1))
    return [g1] + [zero] * (order - 1)


def response_table(forcing, m0, m1, order):
    """Resolvent responses H[i, j] for i + j <= order, i >= 1.

    H[i, j] is the j-th derivative at 0 of eps -> (I - L_eps)^(-1)
    applied to the i-th forcing term, computed through the geometric
    recursion j! [(I - L0)^(-1) (L1 - L0)]^j (I - L0)^(-1).
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if len(forcing) < order:
        raise ValueError(f"need {order} forcing terms, got {len(forcing)}")
    delta = m1.entries - m0.entries
    table = {}
    for i in range(1, order + 1):
        g = forcing[i - 1]
        if not np.any(g.coeffs):
            zero = ChebFn(np.zeros(g.degree + 1))
            for j in range(order - i + 1):
                table[(i, j)] = zero
            continue
        cur = resolvent_solve(m0, g)
        table[(i, 0)] = cur
        fact = 1.0
        for j in range(1, order - i + 1):
            cur = resolvent_solve(m0, ChebFn.from_values(delta @ cur.values))
            fact *= j
            table[(i, j)] = fact * cur
    return table


def density_derivative(table, n):
    """n-th derivative of eps -> h_eps at 0: sum_i binom(n, i) H[i, n-i]."""
    if n < 1:
        raise ValueError("derivative order must be at least 1")
    terms = [(float(math.comb(n, i)), table[(i, n - i)]) for i in range(1, n + 1)]
    return linear_combo(terms)


def mixture_series(h0, m0, m1, order=3):
    """Taylor series of the stationary density of the affine mixture.

    Runs the coefficient recursion c_1 = (I - L0)^(-1) (L1 h0 - h0),
    c_n = (I - L0)^(-1) (L1 - L0) c_(n-1).  Every coefficient is
    zero-mean, so any truncation keeps unit mass.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    g1 = mixture_forcing_terms(h0, m1, 1)[0]
    delta = m1.entries - m0.entries
    coeffs = [resolvent_solve(m0, g1)]
    for _ in range(2, order + 1):
        nxt = resolvent_solve(
            m0, ChebFn.from_values(delta @ coeffs[-1].values)
        )
        coeffs.append(nxt)
    return PerturbationSeries(h0, tuple(coeffs), order)


def residual(eps, h, m0, m1):
    """Node sup-norm of L_eps h - h for the mixture at weight eps."""
    if m0.degree != m1.degree or h.degree != m0.degree:
        raise ValueError("degree mismatch between operators and function")
    entries = (1.0 - eps) * m0.entries + eps * m1.entries
    return float(np.max(np.abs(entries @ h.values - h.values)))
