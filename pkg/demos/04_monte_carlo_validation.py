"""Validate the spectral predictions against direct simulation.

Simulates the random map honestly: uniform starting points, biased
coin flips between the two maps, digits read off the orbit.  The
empirical digit frequencies and the position histogram should match
the expansion-based predictions within sampling error.
"""

import math

from gaussrenyi import (
    MapKind,
    SimConfig,
    assemble_operator,
    digit_probability,
    empirical_density,
    invariant_density,
    mixture_series,
    simulate_digit_freq,
)

m0 = assemble_operator(MapKind.GAUSS, 128)
m1 = assemble_operator(MapKind.RENYI, 128)
h0 = invariant_density(m0)
series = mixture_series(h0, m0, m1, order=2)

eps = 0.1
cfg = SimConfig(eps=eps, samples=10**6, n_index=20, seed=2024)
law = simulate_digit_freq(cfg, n_max=30)
freqs = law.frequencies()
errs = law.std_errors()

print(f"digit frequencies at eps = {eps}, digit index 20, 1e6 samples:")
print("  N   empirical     predicted     pull")
for n in range(1, 9):
    p = digit_probability(n, eps, series)
    pull = (freqs[n - 1] - p) / errs[n - 1]
    print(f"{n:4d}  {freqs[n - 1]:.6f}     {p:.6f}    {pull:+5.2f}")
print("(pulls are gaps in standard-error units; |pull| < 3 is noise)")

# the orbit histogram after burn-in against the order-2 density
hist = empirical_density(SimConfig(eps=eps, samples=10**5, seed=7, burn_in=200), bins=10)
h_eps = series.at(eps)
print("\nposition histogram vs predicted cell masses (10 bins):")
print("   bin        empirical   predicted")
for lo, hi, mass in zip(hist.edges[:-1], hist.edges[1:], hist.masses):
    predicted = h_eps.integrate_on(float(lo), float(hi))
    print(f"[{lo:.1f}, {hi:.1f})   {mass:.5f}     {predicted:.5f}")

worst = max(
    abs(mass - h_eps.integrate_on(float(lo), float(hi)))
    / math.sqrt(h_eps.integrate_on(float(lo), float(hi)) / 10**5)
    for lo, hi, mass in zip(hist.edges[:-1], hist.edges[1:], hist.masses)
)
print(f"worst bin deviation: {worst:.2f} standard errors")
