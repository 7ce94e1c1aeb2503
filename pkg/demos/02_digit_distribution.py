"""Limiting digit law of random semi-regular continued fractions.

Regular continued fraction digits follow the Gauss-Kuzmin law.  When
each expansion step flips a biased coin between the Gauss and Renyi
maps, the limiting law of a late digit mixes four interval integrals
of the stationary density over the cells on which the digit is decided
by the next two coin flips.
"""

from gaussrenyi import (
    MapKind,
    assemble_operator,
    digit_cells,
    digit_law,
    gauss_kuzmin,
    invariant_density,
    mixture_series,
)

m0 = assemble_operator(MapKind.GAUSS, 128)
m1 = assemble_operator(MapKind.RENYI, 128)
h0 = invariant_density(m0)
series = mixture_series(h0, m0, m1, order=3)

# the four cells deciding the digit value 5, with their coin weights
print("cells for digit 5:")
for cell in digit_cells(5):
    i, j = cell.weight_exponents
    side = "(lo, hi]" if cell.omega1 == 0 else "[lo, hi)"
    print(
        f"  flips ({cell.omega1},{cell.omega2})  weight (1-e)^{i} e^{j}"
        f"  interval {side} = ({cell.lo:.6f}, {cell.hi:.6f})"
    )

eps = 0.1
law = digit_law(eps, series, n_max=15)
print(f"\ndigit law at eps = {eps} against the Gauss-Kuzmin law:")
print("  N    P_random    P_gauss_kuzmin")
for n in range(1, 16):
    print(f"{n:4d}   {law.probs[n - 1]:.6f}    {gauss_kuzmin(n):.6f}")
print(f"tail mass beyond N = 15: {law.tail_mass:.6f}")
print(f"total: {law.probs.sum() + law.tail_mass:.12f}")

# small digits become slightly less likely, the tail slightly heavier
shift = [law.probs[n - 1] - gauss_kuzmin(n) for n in range(1, 16)]
print("\nlargest shifts:", sorted(shift)[:2], "...", sorted(shift)[-2:])
