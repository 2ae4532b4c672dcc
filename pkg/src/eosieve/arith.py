"""Exact integer and modular arithmetic primitives.

Everything is computed with plain Python integers: trial division against a
cached prime table, deterministic Miller-Rabin for cofactors that outlive the
trial bound, and the usual modular helpers.  All functions are pure; the
prime table is grown monotonically and never mutated in place, so it is safe
to share across threads and processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import FactorizationError

__all__ = [
    "Factorization",
    "euler_phi",
    "factorize",
    "integer_nth_root",
    "is_nth_power_residue",
    "is_probable_prime",
    "is_squarefree",
    "mod_pow",
    "perfect_power_decompose",
    "prime_array",
    "prime_divisors",
    "prime_sieve",
    "squarefree_kernel",
    "vp",
]

# Trial division never walks past this bound; beyond it, cofactors must be
# provably prime (directly or as a small perfect power) or we refuse.
_TRIAL_LIMIT = 10**6

_prime_cache = np.empty(0, dtype=np.int64)
_prime_cache_limit = 1


def _ensure_primes(limit: int) -> None:
    global _prime_cache, _prime_cache_limit
    if limit <= _prime_cache_limit:
        return
    limit = max(limit, 2 * _prime_cache_limit, 1 << 16)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    primes = np.flatnonzero(sieve).astype(np.int64)
    primes.setflags(write=False)
    _prime_cache = primes
    _prime_cache_limit = limit


def prime_array(limit: int) -> np.ndarray:
    """Primes in [2, limit] as a read-only ascending int64 array."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    _ensure_primes(limit)
    hi = np.searchsorted(_prime_cache, limit, side="right")
    return _prime_cache[:hi]


def prime_sieve(limit: int) -> list[int]:
    """All primes in [2, limit], ascending.  ``limit < 2`` gives []."""
    return [int(p) for p in prime_array(limit)]


@dataclass(frozen=True)
class Factorization:
    """A signed prime factorization: sign * prod(p**e) == value."""

    value: int
    factors: tuple[tuple[int, int], ...]
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        prev = 1
        n = 1
        for p, e in self.factors:
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError("exponents must be positive")
            prev = p
            n *= p**e
        if self.sign * n != self.value:
            raise ValueError("factors do not recompose to value")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(x: int) -> Factorization:
    """Prime factorization of a nonzero integer by trial division.

    Cofactors beyond the trial bound are accepted only when provably prime
    (including prime squares and cubes); anything else raises
    FactorizationError rather than returning a wrong answer.
    """
    if x == 0:
        raise ValueError("0 has no prime factorization")
    sign = 1 if x > 0 else -1
    n = abs(x)
    factors: list[tuple[int, int]] = []
    if n > 1:
        bound = min(math.isqrt(n), _TRIAL_LIMIT)
        for p in prime_array(bound).tolist():
            if p * p > n:
                break
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                factors.append((p, e))
        if n > 1:
            if n <= _TRIAL_LIMIT**2 or is_probable_prime(n):
                factors.append((n, 1))
            else:
                for k in (2, 3):
                    r = integer_nth_root(n, k)
                    if r**k == n and is_probable_prime(r):
                        factors.append((r, k))
                        break
                else:
                    raise FactorizationError(
                        f"cofactor {n} exceeds desk-scale factorization"
                    )
    return Factorization(value=x, factors=tuple(factors), sign=sign)


def is_squarefree(x: int) -> bool:
    """True iff no prime square divides x.  Requires |x| > 1."""
    if abs(x) <= 1:
        raise ValueError("is_squarefree requires |x| > 1")
    return all(e == 1 for _, e in factorize(x).factors)


def vp(x: int, p: int) -> int:
    """The p-adic valuation of a nonzero integer."""
    if x == 0:
        raise ValueError("v_p(0) is undefined")
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp reduced into [0, modulus)."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base % modulus, exp, modulus)


def is_nth_power_residue(g: int, N: int, q: int) -> bool:
    """Whether g is an N-th power in the unit group mod q.

    Requires q ≡ 1 (mod N) and gcd(g, q) = 1, in which case the Euler-style
    test g**((q-1)/N) ≡ 1 decides membership in the index-N power subgroup.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    if q < 3 or (q - 1) % N != 0:
        raise ValueError(f"is_nth_power_residue requires q ≡ 1 (mod {N}), got q={q}")
    if g % q == 0:
        raise ValueError("g must be a unit mod q")
    return pow(g % q, (q - 1) // N, q) == 1


def perfect_power_decompose(g: int) -> tuple[int, int]:
    """Write g >= 2 as h**d with d maximal (h not a proper power)."""
    if g < 2:
        raise ValueError("perfect_power_decompose requires g >= 2")
    fac = factorize(g)
    d = 0
    for _, e in fac.factors:
        d = math.gcd(d, e)
    h = 1
    for p, e in fac.factors:
        h *= p ** (e // d)
    return h, d


def integer_nth_root(x: int, k: int) -> int:
    """Floor of the k-th root of x >= 0."""
    if x < 0 or k < 1:
        raise ValueError("requires x >= 0 and k >= 1")
    if k == 1 or x < 2:
        return x
    try:
        r = int(round(x ** (1.0 / k)))
    except OverflowError:
        r = 1 << (x.bit_length() // k + 1)
    while r > 0 and r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def squarefree_kernel(x: int) -> int:
    """Product of the primes dividing x to an odd power (x > 0)."""
    if x < 1:
        raise ValueError("requires x >= 1")
    if x == 1:
        return 1
    kern = 1
    for p, e in factorize(x).factors:
        if e % 2 == 1:
            kern *= p
    return kern


def prime_divisors(n: int) -> list[int]:
    """Distinct primes dividing n (|n| > 1), ascending."""
    return list(factorize(n).primes)


def euler_phi(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise ValueError("requires n >= 1")
    if n == 1:
        return 1
    phi = n
    for p in factorize(n).primes:
        phi -= phi // p
    return phi
