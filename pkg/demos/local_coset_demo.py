#!/usr/bin/env python3
"""Single-coset rigidity of index-form values at a totally ramified prime.

Mod an Eisenstein prime q | m, every local generator of Z[x]/(x^n - m) has
its power-matrix determinant in one fixed N-th power class.  Dropping the
generator condition (allowing a zero linear coefficient) breaks the law
immediately, which is the negative control.
"""

from eosieve import local_coset_check

for n, m, q in [(4, 13, 13), (5, 7, 7), (6, 11, 11)]:
    rep = local_coset_check(n, m, q, trials=5000, seed=1)
    print(
        f"n={n}, m={m}, q={q}: {rep.trials} random generators, "
        f"{rep.failures} left the base class"
    )

control = local_coset_check(4, 13, 13, trials=5000, seed=1, uniformizer_only=False)
print(
    f"negative control (b_1 = 0 allowed): {control.failures} failures "
    f"out of {control.trials}"
)
