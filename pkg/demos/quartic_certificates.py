#!/usr/bin/env python3
"""The quartic story at m = 2, 73, 13.

For K = Q(m^(1/4)) the power order Z[alpha] is maximal exactly when
m is squarefree and m != 1 mod 4.  Index 1, a nontrivial index with no
obstruction witness, and a certified local obstruction all occur within
the first few radicands.
"""

from eosieve import obstruction_certificate, alpha_monogenic, pure_index

for m in (2, 73, 13):
    inv = pure_index(4, m)
    cert = obstruction_certificate(4, m)
    print(f"m = {m:3d}: alpha-monogenic = {inv.alpha_monogenic!s:5s}  g = {inv.g}")
    if cert:
        print(
            f"          obstruction certificate at q = {cert.q}: "
            f"witness g^((q-1)/N) = {cert.witness} != 1 mod {cert.q}"
        )
    elif inv.g > 1:
        print("          no prime divisor of m lies in P_g; no one-prime certificate")

print()
print("certificates among squarefree 2 <= m <= 200:")
for m in range(2, 201):
    try:
        cert = obstruction_certificate(4, m)
    except ValueError:
        continue
    if cert:
        print(f"  m = {m:3d}: q = {cert.q:3d}, g = {cert.g}, witness = {cert.witness}")
