"""The Gauss and Renyi interval maps and their inverse branches.

The Gauss map T0(x) = 1/x - floor(1/x) generates regular continued
fraction digits; the Renyi map T1(x) = 1/(1-x) - floor(1/(1-x)) is its
backward counterpart.  Both have countably many surjective branches
indexed by a digit a >= 1, with half-open branch cells

    Gauss:  (1/(a+1), 1/a]      Renyi:  [1 - 1/a, 1 - 1/(a+1))

and the fixed-point conventions T0(0) = 0, T1(1) = 0.
"""

from __future__ import annotations

import enum
import math


class MapKind(enum.Enum):
    GAUSS = "gauss"
    RENYI = "renyi"


def forward(kind, x):
    """Apply the map once; returns (image, digit).

    The digit is floor(1/x) for Gauss and floor(1/(1-x)) for Renyi.  At
    the fixed points (x = 0 for Gauss, x = 1 for Renyi) the image is 0
    by convention and the digit is reported as 0, since no branch cell
    contains those points.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x outside [0, 1]: {x!r}")
    if kind is MapKind.GAUSS:
        if x == 0.0:
            return 0.0, 0
        inv = 1.0 / x
    elif kind is MapKind.RENYI:
        if x == 1.0:
            return 0.0, 0
        inv = 1.0 / (1.0 - x)
    else:
        raise TypeError(f"not a MapKind: {kind!r}")
    a = int(math.floor(inv))
    return inv - a, a


def inverse_branch(kind, a, y):
    """Inverse of the a-th branch: 1/(a+y) for Gauss, 1 - 1/(a+y) for Renyi."""
    _check_branch(a)
    if not 0.0 <= y <= 1.0:
        raise ValueError(f"y outside [0, 1]: {y!r}")
    if kind is MapKind.GAUSS:
        return 1.0 / (a + y)
    if kind is MapKind.RENYI:
        return 1.0 - 1.0 / (a + y)
    raise TypeError(f"not a MapKind: {kind!r}")


def branch_derivative(kind, a, y):
    """|V'| of the a-th inverse branch, 1/(a+y)^2 for both map kinds."""
    _check_branch(a)
    if not 0.0 <= y <= 1.0:
        raise ValueError(f"y outside [0, 1]: {y!r}")
    if kind not in (MapKind.GAUSS, MapKind.RENYI):
        raise TypeError(f"not a MapKind: {kind!r}")
    return 1.0 / (a + y) ** 2


def two_step_derivative(p, q, n, k, x, order=1):
    """|d^i/dx^i| of the two-step inverse branch V_p,n composed with V_q,k.

    Closed forms for the pure pairs:

        (0, 0):  i! n^(i-1) / (n(k+x) + 1)^(i+1)
        (1, 1):  i! (n+1)^(i-1) / ((n+1)(k+x) - 1)^(i+1)

    The mixed pairs differ from these only by sign, (V^(0,0))' =
    -(V^(1,0))' and (V^(1,1))' = -(V^(0,1))', so their magnitudes
    coincide with the matching pure pair.
    """
    if p not in (0, 1) or q not in (0, 1):
        raise ValueError("map selectors must be 0 or 1")
    _check_branch(n)
    _check_branch(k)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x outside [0, 1]: {x!r}")
    if order < 1:
        raise ValueError("derivative order must be at least 1")
    i = order
    fact = math.factorial(i)
    if (p, q) in ((0, 0), (1, 0)):
        return fact * n ** (i - 1) / (n * (k + x) + 1.0) ** (i + 1)
    return fact * (n + 1) ** (i - 1) / ((n + 1) * (k + x) - 1.0) ** (i + 1)


def _check_branch(a):
    if a < 1:
        raise ValueError(f"branch digit must be a positive integer: {a!r}")
