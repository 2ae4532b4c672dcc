#!/usr/bin/env python3
"""Trinomial, twisted, and thin families.

x^n + tx + t is Eisenstein at every prime dividing a squarefree t; when
t L_n(t) is squarefree and gcd(t, n(n-1)) = 1, the power order is maximal.
Scaling the generator by c produces a fixed index c^(n(n-1)/2) without
creating any local obstruction, and the same happens along a positive
fraction of prime radicands.
"""

from eosieve import (
    euler_product_S,
    in_Tn,
    thin_Pn_member,
    thin_family_check,
    trinomial_data,
    trinomial_monogenic_check,
    twist_index_check,
)
from eosieve.families import squarefree_value_count, thin_member_density

members = [t for t in range(2, 120) if in_Tn(4, t)]
print("first admissible quartic trinomial parameters:", members[:10])
print("power order maximal for each:", all(trinomial_monogenic_check(4, t) for t in members[:10]))

t = members[0]
d = trinomial_data(4, t)
print(f"disc(x^4 + {t}x + {t}) = t^3 (256 - 27 t) = {d.disc}")

print()
print("twist by c = 2: the distinguished generator picks up index 2^6 = 64")
for t in members[:5]:
    print(f"  t = {t:3d}: [Z[alpha] : Z[2 alpha]] = {twist_index_check(4, 2, t)}")

print()
S = euler_product_S(4, 10**5)
count = squarefree_value_count(4, 10**6)
print(f"density of squarefree t L_4(t): Euler product {S.value:.6f}, "
      f"observed {count / 10**6:.6f} at 1e6")

print()
print("thin family (prime radicands q = 3 mod 4, scaled by c = 2):")
shown = 0
q = 2
while shown < 5:
    if thin_Pn_member(4, 2, q):
        rep = thin_family_check(4, 2, q)
        print(f"  q = {q:3d}: power order maximal = {rep.alpha_monogenic_of_q}, "
              f"distinguished index = {rep.distinguished_index}")
        shown += 1
    q += 1
_, _, ratio = thin_member_density(4, 2, 10**6)
print(f"  member density among primes to 1e6: {ratio:.4f} (expected 1/2)")
