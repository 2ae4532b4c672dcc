#!/usr/bin/env python3
"""Obstruction primes P_g: enumeration, density, and Mertens growth.

P_g collects the primes q = 1 mod 2N, coprime to 2Ng, at which g fails to
be an N-th power residue.  Its density among all primes is
(1 - 1/[L:K]) / phi(2N), estimated here by counting and snapping the
residue fraction to a divisor of N.
"""

from eosieve import enumerate_Pg, estimate_delta, kummer_data, mertens_sum

N = 6  # degree 4 fields

for g in (2, 4, 8, 64):
    kd = kummer_data(g, N)
    line = f"g = {g:2d}: g = {kd.h}^{kd.d}, deg Q(g^(1/N)) = {kd.b}, nontrivial = {kd.nontrivial}"
    if kd.nontrivial:
        est = estimate_delta(g, N, 10**6)
        line += f", [L:K] = {est.l_over_k}, delta = {est.delta}"
    print(line)

print()
print("P_4 up to 200:", enumerate_Pg(4, N, 200))

print()
print("partial sums of 1/q over P_4 (slope vs log log X estimates delta):")
rep = mertens_sum(4, N, 10**6, [10**3, 10**4, 10**5, 10**6])
for x, s in zip(rep.xs, rep.sums):
    print(f"  X = {x:>9,}: sum = {s:.5f}")
print(f"  regression slope = {rep.slope:.4f}  (delta_4 = 1/6 = {1/6:.4f})")
