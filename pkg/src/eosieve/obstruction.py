"""Obstruction machinery at Eisenstein primes.

For an index value g >= 2 and N = n(n-1)/2, the obstruction prime set

    P_g = { q prime : q not dividing 2Ng, q = 1 mod 2N, g not an N-th power mod q }

certifies, at any member q dividing the radicand, that no orientation and no
global sign make the index form represent that sign over the q-adic
integers.  This module builds the Kummer data of g, enumerates P_g,
estimates its density, emits one-prime certificates, and empirically checks
the single-coset structure of index-form values on local generators.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from fractions import Fraction

from .arith import (
    euler_phi,
    is_nth_power_residue,
    perfect_power_decompose,
    prime_array,
    prime_divisors,
    squarefree_kernel,
    is_squarefree,
)
from .errors import AmbiguousSnapError, ConsistencyError
from .purefield import binomial_irreducible, pure_index

__all__ = [
    "CosetCheckReport",
    "KummerData",
    "ObstructionCertificate",
    "obstruction_certificate",
    "enumerate_Pg",
    "estimate_delta",
    "in_Pg",
    "kummer_data",
    "local_coset_check",
    "minus_one_residue_check",
]


@dataclass(frozen=True)
class KummerData:
    """Shape of the Kummer class of g inside Q(zeta_2N, g^(1/N))."""

    g: int
    N: int
    h: int
    d: int
    b: int
    nontrivial: bool
    l_over_k: int | None = None
    delta: Fraction | None = None

    def __post_init__(self):
        if self.h**self.d != self.g:
            raise ValueError("h^d must equal g")
        if self.b != self.N // math.gcd(self.N, self.d):
            raise ValueError("b must equal N / gcd(N, d)")
        if self.b == 1 and self.nontrivial:
            raise ValueError("b = 1 forces a trivial Kummer class")
        if self.l_over_k is not None:
            if self.N % self.l_over_k != 0:
                raise ValueError("l_over_k must divide N")
            if (self.l_over_k >= 2) != self.nontrivial:
                raise ValueError("l_over_k >= 2 exactly when the class is nontrivial")
            if self.delta != Fraction(self.l_over_k - 1, self.l_over_k * euler_phi(2 * self.N)):
                raise ValueError("delta must equal (1 - 1/l_over_k) / phi(2N)")


@dataclass(frozen=True)
class ObstructionCertificate:
    """A one-prime witness of a fixed-sign local obstruction at q | m."""

    n: int
    m: int
    g: int
    q: int
    witness: int

    @property
    def N(self) -> int:
        return self.n * (self.n - 1) // 2

    def __post_init__(self):
        N = self.N
        if self.m % self.q != 0:
            raise ValueError("certificate prime must divide the radicand")
        if self.q % (2 * N) != 1:
            raise ValueError("certificate prime must be 1 mod 2N")
        if (2 * N * self.g) % self.q == 0:
            raise ValueError("certificate prime must not divide 2Ng")
        if self.witness != pow(self.g % self.q, (self.q - 1) // N, self.q):
            raise ValueError("witness does not match g^((q-1)/N) mod q")
        if self.witness == 1:
            raise ValueError("witness must differ from 1")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "g": self.g,
            "q": self.q,
            "witness": self.witness,
            "N": self.N,
        }


@dataclass(frozen=True)
class CosetCheckReport:
    n: int
    m: int
    q: int
    trials: int
    failures: int
    base_class: int
    seed: int


def kummer_data(g: int, N: int) -> KummerData:
    """Kummer invariants of g relative to exponent N.

    Writes g = h^d with h not a proper power and sets b = N/gcd(N, d), the
    degree of g^(1/N) over Q.  The class is trivial exactly when the radical
    field Q(g^(1/N)) sits inside Q(zeta_2N): impossible for b > 2 (a real
    field that would have to be normal), automatic for b = 1, and decided
    for b = 2 by whether the discriminant of the quadratic subfield divides
    2N.
    """
    if g < 2 or N < 2:
        raise ValueError("requires g >= 2 and N >= 2")
    h, d = perfect_power_decompose(g)
    d0 = math.gcd(N, d)
    b = N // d0
    if b == 1:
        nontrivial = False
    elif b > 2:
        nontrivial = True
    else:
        kern = squarefree_kernel(h)
        disc = kern if kern % 4 == 1 else 4 * kern
        nontrivial = (2 * N) % disc != 0
    return KummerData(g=g, N=N, h=h, d=d, b=b, nontrivial=nontrivial)


def in_Pg(q: int, g: int, N: int) -> bool:
    """Membership of the prime q in the obstruction set P_g."""
    if g < 2 or N < 2:
        raise ValueError("requires g >= 2 and N >= 2")
    if (2 * N * g) % q == 0 or q % (2 * N) != 1:
        return False
    return not is_nth_power_residue(g, N, q)


def enumerate_Pg(g: int, N: int, limit: int) -> list[int]:
    """All primes q <= limit with in_Pg(q, g, N), ascending."""
    if g < 2 or N < 2:
        raise ValueError("requires g >= 2 and N >= 2")
    primes = prime_array(limit)
    modulus = 2 * N
    out = []
    for q in primes[primes % modulus == 1].tolist():
        if (2 * N * g) % q != 0 and pow(g % q, (q - 1) // N, q) != 1:
            out.append(q)
    return out


def estimate_delta(g: int, N: int, prime_budget: int) -> KummerData:
    """Empirical Chebotarev estimate of the density of P_g.

    Among primes q = 1 mod 2N up to the budget (q not dividing 2Ng), the
    fraction with g an N-th power residue estimates 1/[L:K]; that fraction
    is snapped to the nearest 1/e over divisors e of N.  Snaps with the two
    nearest candidates closer than twice the sampling standard error are
    rejected as ambiguous.
    """
    if prime_budget < 10**5:
        raise ValueError("prime_budget must be at least 10^5")
    kd = kummer_data(g, N)
    if not kd.nontrivial:
        raise ValueError(f"Kummer class of g={g} at N={N} is trivial; delta is not defined")
    primes = prime_array(prime_budget)
    modulus = 2 * N
    count = 0
    hits = 0
    for q in primes[primes % modulus == 1].tolist():
        if (2 * N * g) % q == 0:
            continue
        count += 1
        if pow(g % q, (q - 1) // N, q) == 1:
            hits += 1
    if count == 0:
        raise ValueError("no usable primes under the budget")
    phi_hat = hits / count
    divisors = [e for e in range(1, N + 1) if N % e == 0]
    ranked = sorted(divisors, key=lambda e: abs(1 / e - phi_hat))
    best, second = ranked[0], ranked[1]
    se = math.sqrt(max(phi_hat * (1 - phi_hat), 1.0 / count) / count)
    gap = abs(1 / second - phi_hat) - abs(1 / best - phi_hat)
    if gap < 2 * se:
        raise AmbiguousSnapError(phi_hat, (best, second))
    if best == 1:
        raise ConsistencyError(
            f"nontrivial Kummer class snapped to [L:K] = 1 (phi_hat = {phi_hat:.6f})"
        )
    delta = Fraction(best - 1, best * euler_phi(2 * N))
    return replace(kd, l_over_k=best, delta=delta)


def obstruction_certificate(n: int, m: int) -> ObstructionCertificate | None:
    """One-prime fixed-sign obstruction certificate, if any prime q | m gives one.

    Returns the certificate at the smallest qualifying prime divisor of m,
    or None when the power order is already maximal or no divisor of m lies
    in P_g.
    """
    inv = pure_index(n, m)
    g = inv.g
    if g == 1:
        return None
    N = n * (n - 1) // 2
    for q in prime_divisors(m):
        if in_Pg(q, g, N):
            return ObstructionCertificate(
                n=n, m=m, g=g, q=q, witness=pow(g % q, (q - 1) // N, q)
            )
    return None


def _det_mod_q(rows: list[list[int]], q: int) -> int:
    n = len(rows)
    a = [[x % q for x in r] for r in rows]
    det = 1
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i][k]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det % q
        det = det * a[k][k] % q
        inv = pow(a[k][k], q - 2, q)
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] * inv % q
                a[i] = [(x - f * y) % q for x, y in zip(a[i], a[k])]
    return det % q


def _poly_mul_mod_q(u: list[int], v: list[int], n: int, m_mod: int, q: int) -> list[int]:
    out = [0] * (2 * n - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                if vj:
                    out[i + j] = (out[i + j] + ui * vj) % q
    # x^n = m mod q (m_mod is 0 at Eisenstein primes, kept general for clarity)
    for k in range(2 * n - 2, n - 1, -1):
        if out[k]:
            out[k - n] = (out[k - n] + out[k] * m_mod) % q
    return out[:n]


def local_coset_check(
    n: int,
    m: int,
    q: int,
    trials: int,
    seed: int,
    uniformizer_only: bool = True,
) -> CosetCheckReport:
    """Empirical check that index-form values on local generators fill one coset.

    Works in Z[x]/(x^n - m) with coefficients mod q, where q | m.  Random
    generators b_0 + b_1 a + ... + b_{n-1} a^(n-1) are drawn with b_1 a unit
    mod q (the linear coefficient controls the valuation of beta - b_0, so
    this is exactly the local-generator condition); each determinant of the
    power matrix must land in the same N-th power class as that of a itself.
    Setting uniformizer_only=False admits b_1 = 0 and serves as the negative
    control.  Randomness comes from random.Random(seed), the stdlib Mersenne
    Twister, so runs are reproducible bit for bit.
    """
    N = n * (n - 1) // 2
    if abs(m) <= 1 or not is_squarefree(m):
        raise ValueError("m must be squarefree with |m| > 1")
    if m % q != 0:
        raise ValueError("q must divide m")
    if N % q == 0:
        raise ValueError("q must not divide N = n(n-1)/2")
    if not binomial_irreducible(n, m):
        raise ValueError(f"x^{n} - ({m}) is reducible over Q")
    if trials < 1:
        raise ValueError("trials must be positive")
    exponent = (q - 1) // math.gcd(N, q - 1)
    m_mod = m % q
    # det of the power matrix of a itself is 1 (the rows are the power basis)
    base_class = pow(1, exponent, q)
    rng = random.Random(seed)
    failures = 0
    for _ in range(trials):
        b = [rng.randrange(q) for _ in range(n)]
        if uniformizer_only:
            b[1] = rng.randrange(1, q)
        rows = [[1] + [0] * (n - 1)]
        cur = rows[0]
        for _ in range(n - 1):
            cur = _poly_mul_mod_q(cur, b, n, m_mod, q)
            rows.append(cur)
        r = _det_mod_q(rows, q)
        if pow(r, exponent, q) != base_class:
            failures += 1
    return CosetCheckReport(
        n=n, m=m, q=q, trials=trials, failures=failures, base_class=base_class, seed=seed
    )


def minus_one_residue_check(q: int, N: int) -> bool:
    """Whether -1 is an N-th power mod q; always true when q = 1 mod 2N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if q % (2 * N) != 1:
        raise ValueError("requires q = 1 mod 2N")
    return is_nth_power_residue(q - 1, N, q)
