"""Monte Carlo and brute-force references for the random map.

Everything here is an independent ground truth against the spectral
machinery: orbits of the random composition are simulated directly
from the map definitions, digits are read off with the two-symbol
digit function, and transfer operator images are re-computed by plain
branch summation with no tail model.

The digit of the random continued fraction at time n depends on the
current point together with the next two map choices.  With the map
selection sequence shifted by one deterministic Gauss step (first
symbol 0), the n-th digit is obtained by iterating the random map
n - 1 times and applying the digit function to the resulting state.

Reproducibility contract: a run is a pure function of the
configuration.  The generator is numpy's default PCG64 seeded with the
configured seed; the initial points are drawn first (one uniform per
sample), then the map choices in simulation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.polynomial.chebyshev as ncheb

from .maps import MapKind


@dataclass(frozen=True)
class SimConfig:
    """Configuration of one reproducible simulation run."""

    eps: float
    samples: int
    n_index: int = 1
    seed: int = 0
    burn_in: int = 100

    def __post_init__(self):
        if not 0.0 <= self.eps <= 1.0:
            raise ValueError(f"eps must be in [0, 1]: {self.eps!r}")
        if self.samples < 1:
            raise ValueError(f"samples must be positive: {self.samples!r}")
        if self.n_index < 1:
            raise ValueError(f"n_index must be positive: {self.n_index!r}")
        if self.burn_in < 0:
            raise ValueError(f"burn_in must be non-negative: {self.burn_in!r}")


@dataclass(frozen=True)
class EmpiricalLaw:
    """Digit counts for N = 1..n_max plus an overflow bucket."""

    counts: np.ndarray
    overflow: int
    total: int

    def __post_init__(self):
        c = np.asarray(self.counts, dtype=np.int64)
        c.setflags(write=False)
        object.__setattr__(self, "counts", c)
        if int(c.sum()) + self.overflow != self.total:
            raise ValueError("counts plus overflow must equal the sample total")

    def frequencies(self):
        return self.counts / self.total

    def std_errors(self):
        p = self.frequencies()
        return np.sqrt(p * (1.0 - p) / self.total)


@dataclass(frozen=True)
class DensityHistogram:
    """Normalized histogram of orbit positions after burn-in."""

    edges: np.ndarray
    masses: np.ndarray

    def __post_init__(self):
        for name in ("edges", "masses"):
            a = np.asarray(getattr(self, name), dtype=float)
            a.setflags(write=False)
            object.__setattr__(self, name, a)


def step(omega_bit, x):
    """One application of the selected map, scalar version."""
    if omega_bit not in (0, 1):
        raise ValueError(f"map selector must be 0 or 1: {omega_bit!r}")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x outside [0, 1]: {x!r}")
    if omega_bit == 0:
        if x == 0.0:
            return 0.0
        inv = 1.0 / x
    else:
        if x == 1.0:
            return 0.0
        inv = 1.0 / (1.0 - x)
    return inv - math.floor(inv)


def digit_b(omega1, omega2, x):
    """Digit read off the state: k + omega2 with omega1 + (-1)^omega1 x
    in the k-th Gauss cell (1/(k+1), 1/k]."""
    if omega1 not in (0, 1) or omega2 not in (0, 1):
        raise ValueError("map selectors must be 0 or 1")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x outside [0, 1]: {x!r}")
    z = 1.0 - x if omega1 == 1 else x
    if z == 0.0:
        raise ValueError("digit undefined at the branch accumulation point")
    return int(math.floor(1.0 / z)) + omega2


def _step_vec(bits, x):
    """Vectorized random map step with the fixed-point conventions."""
    out = np.zeros_like(x)
    g = bits == 0
    xg = x[g]
    pos = xg > 0.0
    inv = 1.0 / xg[pos]
    tmp = np.zeros_like(xg)
    tmp[pos] = inv - np.floor(inv)
    out[g] = tmp
    r = ~g
    xr = x[r]
    below = xr < 1.0
    inv = 1.0 / (1.0 - xr[below])
    tmp = np.zeros_like(xr)
    tmp[below] = inv - np.floor(inv)
    out[r] = tmp
    return out


def simulate_digit_freq(cfg, n_max=100, first_bit=0):
    """Empirical law of the digit at time cfg.n_index.

    Parameters
    ----------
    cfg : SimConfig
        eps, sample count, digit index and seed.
    n_max : int
        Largest digit tracked individually; larger ones land in the
        overflow bucket.
    first_bit : int
        First symbol of the shifted selection sequence.  The digit
        definition uses 0 (a deterministic Gauss step); 1 is offered
        for side-by-side comparison of the convention.

    Returns an :class:`EmpiricalLaw`.  The measure-zero event of an
    orbit landing exactly on a branch endpoint (undefined digit) is
    counted as overflow.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be positive: {n_max!r}")
    if first_bit not in (0, 1):
        raise ValueError(f"first_bit must be 0 or 1: {first_bit!r}")
    rng = np.random.default_rng(cfg.seed)
    x = rng.random(cfg.samples)
    bits = (rng.random((cfg.samples, cfg.n_index)) < cfg.eps).astype(np.int8)
    first = np.full(cfg.samples, first_bit, dtype=np.int8)
    for j in range(cfg.n_index - 1):
        b = first if j == 0 else bits[:, j - 1]
        x = _step_vec(b, x)
    if cfg.n_index == 1:
        w1, w2 = first, bits[:, 0]
    else:
        w1, w2 = bits[:, cfg.n_index - 2], bits[:, cfg.n_index - 1]
    z = np.where(w1 == 1, 1.0 - x, x)
    digits = np.full(cfg.samples, n_max + 1, dtype=np.int64)  # sentinel: overflow
    ok = z > 0.0
    digits[ok] = np.floor(1.0 / z[ok]).astype(np.int64) + w2[ok]
    binned = np.bincount(np.minimum(digits, n_max + 1), minlength=n_max + 2)
    counts = binned[1 : n_max + 1]
    overflow = int(binned[0] + binned[n_max + 1])
    return EmpiricalLaw(counts, overflow, cfg.samples)


def empirical_density(cfg, bins=100):
    """Histogram of orbit positions after cfg.burn_in random steps.

    Each sample is an independent chain started from a uniform point;
    after burn-in the positions are approximately stationary and the
    normalized histogram approximates the stationary density.
    """
    if cfg.burn_in < 50:
        raise ValueError(f"burn_in must be at least 50: {cfg.burn_in!r}")
    if bins < 1:
        raise ValueError(f"bins must be positive: {bins!r}")
    rng = np.random.default_rng(cfg.seed)
    x = rng.random(cfg.samples)
    for _ in range(cfg.burn_in):
        bits = (rng.random(cfg.samples) < cfg.eps).astype(np.int8)
        x = _step_vec(bits, x)
    edges = np.linspace(0.0, 1.0, bins + 1)
    counts, _ = np.histogram(x, bins=edges)
    return DensityHistogram(edges, counts / cfg.samples)


def brute_force_transfer(kind, f, y, a_huge=10**6):
    """Transfer operator image at one point by plain branch summation.

    No tail model: sums f(V_a(y)) / (a + y)^2 for a = 1..a_huge.  Used
    to validate the Taylor-tail policies; the truncation error is of
    order sup|f| / a_huge.
    """
    if kind not in (MapKind.GAUSS, MapKind.RENYI):
        raise TypeError(f"not a MapKind: {kind!r}")
    if a_huge < 10**5:
        raise ValueError(f"a_huge must be at least 1e5: {a_huge!r}")
    if not 0.0 <= y <= 1.0:
        raise ValueError(f"y outside [0, 1]: {y!r}")
    total = 0.0
    chunk = 200000
    for start in range(1, a_huge + 1, chunk):
        a = np.arange(start, min(start + chunk, a_huge + 1), dtype=float)
        u = 1.0 / (a + y)
        pts = u if kind is MapKind.GAUSS else 1.0 - u
        total += float(np.sum(u * u * ncheb.chebval(2.0 * pts - 1.0, f.coeffs)))
    return total
