"""Lasota-Yorke contraction constants for the two-step branch sums.

For smoothness index i >= 2 the sum of i-th powers of two-step branch
derivatives is bounded by

    theta = zeta(2i)^2 - (1 - 2^(-2i))      (Gauss-Gauss pairs)
    c     = zeta(2i)^2                      (Renyi-Renyi pairs)

with theta < 1 < c.  The convex mixture with weight eps on the Renyi
map therefore contracts while (1-eps) theta + eps c < 1, which pins the
admissible range eps <= (1 - theta) / (c - theta).  The i = 1 case is
not covered by these estimates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# closed forms zeta(2m) = rational * pi^(2m) for 2m <= 12
_EVEN_ZETA_RATIONAL = {
    2: (1, 6),
    4: (1, 90),
    6: (1, 945),
    8: (1, 9450),
    10: (1, 93555),
    12: (691, 638512875),
}


def even_zeta(n):
    """zeta(n) for even n >= 2; closed form where available, else summed."""
    if n < 2 or n % 2 != 0:
        raise ValueError(f"even integer >= 2 required: {n!r}")
    if n in _EVEN_ZETA_RATIONAL:
        p, q = _EVEN_ZETA_RATIONAL[n]
        return p * math.pi**n / q
    # converges extremely fast for n >= 14; tail below double rounding
    total = sum(k ** (-float(n)) for k in range(1, 200))
    total += 200.0 ** (1 - n) / (n - 1) + 0.5 * 200.0 ** (-float(n))
    return total


def _check_index(i):
    if i < 2:
        raise ValueError(
            "smoothness index i >= 2 required; the i = 1 contraction "
            "estimate is not covered by these constants"
        )


def theta_bound(i):
    """Contraction factor zeta(2i)^2 - (1 - 2^(-2i)), in (0, 1) for i >= 2."""
    _check_index(i)
    return even_zeta(2 * i) ** 2 - (1.0 - 0.25**i)


def c_bound(i):
    """Renyi-pair bound zeta(2i)^2, slightly above 1 and decreasing in i."""
    _check_index(i)
    return even_zeta(2 * i) ** 2


def eps_max(i):
    """Largest admissible Renyi weight, (1 - theta) / (c - theta)."""
    th = theta_bound(i)
    return (1.0 - th) / (c_bound(i) - th)


@dataclass(frozen=True)
class LasotaYorkeBounds:
    """Contraction constants for a given smoothness index."""

    smoothness: int
    theta: float
    c: float
    eps_max: float


def lasota_yorke_bounds(i):
    return LasotaYorkeBounds(i, theta_bound(i), c_bound(i), eps_max(i))
