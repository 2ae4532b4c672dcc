#!/usr/bin/env python3
"""Density of maximal power orders, and the thinning of unobstructed indices.

The two-sided density of radicands with maximal power order converges to
(6/pi^2) prod_{p | n} p/(p+1).  Among radicands of a fixed index g >= 2,
the fraction avoiding every obstruction prime decays like a power of log,
the quantitative engine behind the density-zero statements.
"""

from eosieve import alpha_density, exceptional_scan, logpower_fit, pg_free_counts

print("alpha-monogenic density, n = 4:")
rep = alpha_density(4, 10**6, [10**3, 10**4, 10**5, 10**6])
for x, d in zip(rep.checkpoints.xs, rep.densities):
    print(f"  X = {x:>9,}: density = {d:.5f}")
print(f"  target (6/pi^2)(2/3) = {rep.target:.5f}")

print()
print("P_4-free integers up to X (count / X and the fitted log-power):")
cp = pg_free_counts(4, 6, 10**7, [10**4, 10**5, 10**6, 10**7])
for x, c in zip(cp.xs, cp.counts):
    print(f"  X = {x:>10,}: {c:>9,}  ratio {c / x:.4f}")
fit = logpower_fit(cp)
print(f"  fitted exponent {fit.exponent:.3f} (Chebotarev density of P_4 is 1/6)")

print()
print("index-g radicands that avoid P_g, as a fraction of all index-g radicands:")
scan = exceptional_scan(4, 10**4, [10**2, 10**3, 10**4])
for row in scan.rows:
    ratios = ", ".join(f"{r:.3f}" for r in row.ratios)
    print(f"  g = {row.g}: ratios at X = 1e2/1e3/1e4 -> {ratios}")
print("  (the true limit is 0; the decay is logarithmic, hence slow)")
