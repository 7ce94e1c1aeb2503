"""Digit statistics of regular and random semi-regular continued fractions.

The classical Gauss-Kuzmin law gives the limiting frequency of digit N
in regular continued fractions as log2((1 + 1/N) / (1 + 1/(N + 1))).
For the random system that prepends a Gauss step and then picks the
Renyi map with probability eps, the digit value is decided by the next
two map choices together with the current point, so the limit law of
the N-th digit decomposes into four interval integrals of the
stationary density h_eps:

    (1-eps)^2 over (1/(N+1), 1/N]        (Gauss, Gauss)
    (1-eps)eps over (1/N, 1/(N-1)]       (Gauss, Renyi)
    eps(1-eps) over [1-1/N, 1-1/(N+1))   (Renyi, Gauss)
    eps^2     over [1-1/(N-1), 1-1/N)    (Renyi, Renyi)

For N = 1 the two cells referencing 1/(N-1) are empty.  The density is
supplied as a :class:`~gaussrenyi.perturbation.PerturbationSeries`, so
at eps = 0 everything collapses back to the Gauss-Kuzmin law.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .bounds import eps_max

_EPS_ADMISSIBLE = eps_max(2)


class NormalizationError(RuntimeError):
    """Digit probabilities failed to sum to at most one."""


def gauss_kuzmin(n):
    """Gauss-Kuzmin probability of digit n: log2((1 + 1/n) / (1 + 1/(n+1)))."""
    if n < 1:
        raise ValueError(f"digit must be a positive integer: {n!r}")
    return math.log2((1.0 + 1.0 / n) / (1.0 + 1.0 / (n + 1)))


def gauss_kuzmin_tail(n_max):
    """Mass of the Gauss-Kuzmin law above n_max; the sum telescopes."""
    if n_max < 1:
        raise ValueError(f"digit cutoff must be a positive integer: {n_max!r}")
    return math.log2(1.0 + 1.0 / (n_max + 1))


@dataclass(frozen=True)
class DigitCell:
    """One interval of the four-cell decomposition for a fixed digit.

    The Gauss-first cells (omega1 = 0) are right-closed, the
    Renyi-first cells left-closed, matching the half-open branch
    partitions of the two maps.
    """

    omega1: int
    omega2: int
    lo: float
    hi: float

    @property
    def is_empty(self):
        return self.hi <= self.lo

    @property
    def weight_exponents(self):
        """(i, j) with cell weight (1 - eps)^i eps^j; always i + j = 2."""
        s = self.omega1 + self.omega2
        return (2 - s, s)

    def weight(self, eps):
        i, j = self.weight_exponents
        return (1.0 - eps) ** i * eps**j

    def contains(self, x):
        if self.is_empty:
            return False
        if self.omega1 == 0:
            return self.lo < x <= self.hi
        return self.lo <= x < self.hi


def digit_cells(n):
    """The four (omega1, omega2) cells on which the digit equals n."""
    if n < 1:
        raise ValueError(f"digit must be a positive integer: {n!r}")
    cells = [DigitCell(0, 0, 1.0 / (n + 1), 1.0 / n)]
    if n >= 2:
        cells.append(DigitCell(0, 1, 1.0 / n, 1.0 / (n - 1)))
    else:
        cells.append(DigitCell(0, 1, 0.0, 0.0))
    cells.append(DigitCell(1, 0, 1.0 - 1.0 / n, 1.0 - 1.0 / (n + 1)))
    if n >= 2:
        cells.append(DigitCell(1, 1, 1.0 - 1.0 / (n - 1), 1.0 - 1.0 / n))
    else:
        cells.append(DigitCell(1, 1, 0.0, 0.0))
    return cells


def digit_probability(n, eps, series):
    """Limiting probability that a late digit equals n, at weight eps.

    Sums the weighted cell integrals of the truncated density
    expansion.  Weights outside the admissible mixture range trigger a
    warning but the computation proceeds.
    """
    if eps < 0.0 or eps > _EPS_ADMISSIBLE:
        warnings.warn(
            f"mixture weight {eps!r} outside the admissible range "
            f"[0, {_EPS_ADMISSIBLE:.6f}]",
            stacklevel=2,
        )
    h = series.at(eps)
    total = 0.0
    for cell in digit_cells(n):
        if cell.is_empty:
            continue
        total += cell.weight(eps) * h.integrate_on(cell.lo, cell.hi)
    return total


@dataclass(frozen=True)
class DigitLaw:
    """Digit probabilities 1..n_max plus the mass beyond the cutoff."""

    eps: float
    order: int
    probs: np.ndarray
    tail_mass: float

    def __post_init__(self):
        p = np.asarray(self.probs, dtype=float)
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)


def digit_law(eps, series, n_max=100):
    """Tabulate digit probabilities for N = 1..n_max.

    The tail mass is assigned by conservation, 1 minus the tabulated
    sum; small negative tails (above -1e-8) are clamped to zero, larger
    ones raise NormalizationError.  Entries below -1e-9 indicate series
    truncation error and are flagged with a warning rather than
    clamped.
    """
    if n_max < 1:
        raise ValueError(f"digit cutoff must be a positive integer: {n_max!r}")
    probs = np.array([digit_probability(n, eps, series) for n in range(1, n_max + 1)])
    if np.any(probs < -1e-9):
        worst = float(probs.min())
        warnings.warn(
            f"digit probability dips to {worst:.3e}; "
            f"the series truncation is too coarse for this weight",
            stacklevel=2,
        )
    tail = 1.0 - float(probs.sum())
    if tail < -1e-8:
        raise NormalizationError(f"digit probabilities sum to 1 - ({tail:.3e}) > 1")
    return DigitLaw(eps, series.order, probs, max(tail, 0.0))
