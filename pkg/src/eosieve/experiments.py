"""Desk-scale density and sieve experiments.

Counts are exact: squarefree status and the power-order criterion are read
off residue tables and quadratic sieves, P-freeness is decided by marking
multiples of the obstruction primes over the whole range, and the only
floating point enters in the final density ratios and fits.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .arith import prime_array, prime_divisors
from .obstruction import enumerate_Pg, in_Pg
from .orders import equation_order_index
from .purefield import pure_poly

__all__ = [
    "AlphaDensityReport",
    "Checkpoints",
    "ExceptionalRow",
    "ExceptionalScanReport",
    "FitResult",
    "MertensReport",
    "alpha_density",
    "alpha_density_target",
    "count_squarefree_not_1_mod_4",
    "exceptional_scan",
    "logpower_fit",
    "mertens_sum",
    "pfree_count_inclusion_exclusion",
    "pfree_counts_for_primes",
    "pg_free_counts",
]


@dataclass(frozen=True)
class Checkpoints:
    """Cumulative counts at an ascending ladder of thresholds."""

    xs: tuple[int, ...]
    counts: tuple[int, ...]
    label: str

    def __post_init__(self):
        if len(self.xs) != len(self.counts) or len(self.xs) < 3:
            raise ValueError("need at least 3 matching checkpoints")
        if any(b <= a for a, b in zip(self.xs, self.xs[1:])):
            raise ValueError("thresholds must be strictly ascending")
        if any(b < a for a, b in zip(self.counts, self.counts[1:])):
            raise ValueError("cumulative counts must be nondecreasing")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")


@dataclass(frozen=True)
class FitResult:
    exponent: float
    constant: float
    rms_residual: float
    window: tuple[int, int]


@dataclass(frozen=True)
class AlphaDensityReport:
    n: int
    checkpoints: Checkpoints
    densities: tuple[float, ...]
    target: float


@dataclass(frozen=True)
class MertensReport:
    g: int
    N: int
    xs: tuple[int, ...]
    sums: tuple[float, ...]
    slope: float
    intercept: float


@dataclass(frozen=True)
class ExceptionalRow:
    g: int
    totals: tuple[int, ...]
    pg_free: tuple[int, ...]

    @property
    def ratios(self) -> tuple[float, ...]:
        return tuple(
            (f / t) if t else float("nan") for f, t in zip(self.pg_free, self.totals)
        )


@dataclass(frozen=True)
class ExceptionalScanReport:
    n: int
    xs: tuple[int, ...]
    rows: tuple[ExceptionalRow, ...]
    members: tuple[tuple[int, int, bool], ...]  # (g, signed m, is P_g-free)

    def row(self, g: int) -> ExceptionalRow:
        for r in self.rows:
            if r.g == g:
                return r
        raise KeyError(f"no index value g={g} observed in the scan")


def _validate_checkpoints(xs, x_max: int) -> tuple[int, ...]:
    xs = tuple(int(x) for x in xs)
    if len(xs) < 3:
        raise ValueError("need at least 3 checkpoints")
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise ValueError("checkpoints must be strictly ascending")
    if xs[0] < 2 or xs[-1] > x_max:
        raise ValueError("checkpoints must lie in [2, x_max]")
    return xs


def _squarefree_mask(x_max: int) -> np.ndarray:
    """mask[k] says |m| = k is admissible: k >= 2 and squarefree."""
    mask = np.ones(x_max + 1, dtype=bool)
    mask[:2] = False
    for p in prime_array(math.isqrt(x_max)).tolist():
        mask[p * p :: p * p] = False
    return mask


def _criterion_tables(n: int) -> list[tuple[int, np.ndarray]]:
    """Per prime p | n, the residues r mod p^2 with v_p(r^p - r) = 1."""
    tables = []
    for p in prime_divisors(n):
        p2 = p * p
        ok = np.array([(pow(r, p, p2) - r) % p2 != 0 for r in range(p2)], dtype=bool)
        tables.append((p2, ok))
    return tables


def _criterion_masks(n: int, x_max: int, sf: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Boolean masks over |m| for the power-order criterion, per sign."""
    ks = np.arange(x_max + 1)
    pos = sf.copy()
    neg = sf.copy()
    for p2, ok in _criterion_tables(n):
        pos &= ok[ks % p2]
        neg &= ok[(-ks) % p2]
    return pos, neg


def alpha_density_target(n: int) -> float:
    """(6 / pi^2) * prod over p | n of p / (p + 1)."""
    t = 6.0 / math.pi**2
    for p in prime_divisors(n):
        t *= p / (p + 1)
    return t


def alpha_density(n: int, x_max: int, checkpoints) -> AlphaDensityReport:
    """Two-sided density of radicands whose power order is maximal.

    Counts m with |m| <= X, squarefree (hence irreducible at these degrees)
    and satisfying the congruence criterion; densities are counts / (2X).
    """
    xs = _validate_checkpoints(checkpoints, x_max)
    sf = _squarefree_mask(x_max)
    pos, neg = _criterion_masks(n, x_max, sf)
    cum = np.cumsum(pos.astype(np.int64) + neg.astype(np.int64))
    counts = tuple(int(cum[x]) for x in xs)
    cp = Checkpoints(xs=xs, counts=counts, label=f"alpha-monogenic n={n}")
    densities = tuple(c / (2 * x) for c, x in zip(counts, xs))
    return AlphaDensityReport(n=n, checkpoints=cp, densities=densities, target=alpha_density_target(n))


def count_squarefree_not_1_mod_4(x_max: int) -> int:
    """#{m : 2 <= |m| <= x_max, m squarefree, m != 1 mod 4}, both signs."""
    sf = _squarefree_mask(x_max)
    ks = np.arange(x_max + 1)
    pos = sf & (ks % 4 != 1)
    neg = sf & ((-ks) % 4 != 1)
    return int(pos.sum() + neg.sum())


def pfree_counts_for_primes(primes, x_max: int, checkpoints, label: str) -> Checkpoints:
    """Counts of 1 <= m <= X untouched by the given primes, by multiple-marking."""
    xs = _validate_checkpoints(checkpoints, x_max)
    free = np.ones(x_max + 1, dtype=bool)
    free[0] = False
    for q in primes:
        free[q::q] = False
    cum = np.cumsum(free.astype(np.int64))
    counts = tuple(int(cum[x]) for x in xs)
    return Checkpoints(xs=xs, counts=counts, label=label)


def pg_free_counts(g: int, N: int, x_max: int, checkpoints) -> Checkpoints:
    """Counts of 1 <= m <= X with no prime factor in P_g.

    Freeness is decided by one pass marking multiples of every obstruction
    prime up to x_max, not by factoring individual integers.
    """
    return pfree_counts_for_primes(
        enumerate_Pg(g, N, x_max), x_max, checkpoints, f"P_{g}-free (N={N})"
    )


def pfree_count_inclusion_exclusion(primes, x: int) -> int:
    """#{1 <= m <= x : no p in primes divides m} by inclusion-exclusion."""
    primes = list(primes)
    total = 0
    for mask in range(1 << len(primes)):
        d = 1
        bits = 0
        for i, p in enumerate(primes):
            if mask >> i & 1:
                d *= p
                bits += 1
        if d <= x:
            total += (-1) ** bits * (x // d)
    return total


def logpower_fit(cp: Checkpoints) -> FitResult:
    """Least-squares fit of log(count/X) = log(kappa) - delta * log log X."""
    xs = np.array(cp.xs, dtype=float)
    counts = np.array(cp.counts, dtype=float)
    if len(xs) < 3 or xs[-1] < 100 * xs[0]:
        raise ValueError("fit window must have >= 3 checkpoints spanning >= 2 decades")
    if np.any(counts <= 0):
        raise ValueError("fit requires positive counts at every checkpoint")
    u = np.log(np.log(xs))
    y = np.log(counts / xs)
    slope, intercept = np.polyfit(u, y, 1)
    resid = y - (slope * u + intercept)
    return FitResult(
        exponent=float(-slope),
        constant=float(math.exp(intercept)),
        rms_residual=float(np.sqrt(np.mean(resid**2))),
        window=(cp.xs[0], cp.xs[-1]),
    )


def mertens_sum(g: int, N: int, x_max: int, checkpoints) -> MertensReport:
    """Partial sums of 1/q over q in P_g, with the slope against log log X.

    Each partial sum is accumulated with math.fsum, which rounds the exact
    sum to the nearest double.
    """
    xs = _validate_checkpoints(checkpoints, x_max)
    pg = enumerate_Pg(g, N, x_max)
    sums = []
    for x in xs:
        hi = bisect_right(pg, x)
        sums.append(math.fsum(1.0 / q for q in pg[:hi]))
    u = np.log(np.log(np.array(xs, dtype=float)))
    slope, intercept = np.polyfit(u, np.array(sums), 1)
    return MertensReport(
        g=g, N=N, xs=xs, sums=tuple(sums), slope=float(slope), intercept=float(intercept)
    )


def _scan_chunk(args) -> list[tuple[int, int]]:
    """Index values for a chunk of radicands; top-level for multiprocessing."""
    n, values = args
    candidates = prime_divisors(n)
    out = []
    for m in values:
        g, _ = equation_order_index(pure_poly(n, m), candidates)
        out.append((m, g))
    return out


def exceptional_scan(n: int, x_max: int, checkpoints, workers: int = 1) -> ExceptionalScanReport:
    """Per-index table of P_g-free radicands against all radicands of that index.

    Scans squarefree m with 2 <= |m| <= x_max over both signs.  Radicands
    passing the congruence criterion have index 1 and are skipped (the
    criterion is equivalent to g = 1; the equivalence is regression-tested
    against the saturation engine elsewhere); the rest get their exact index
    from saturation at the primes dividing n.
    """
    xs = _validate_checkpoints(checkpoints, x_max)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    sf = _squarefree_mask(x_max)
    pos, neg = _criterion_masks(n, x_max, sf)
    pending = [int(k) for k in np.flatnonzero(sf & ~pos)] + [
        -int(k) for k in np.flatnonzero(sf & ~neg)
    ]
    if workers == 1 or len(pending) < 256:
        resolved = _scan_chunk((n, pending))
    else:
        chunks = [pending[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, [(n, c) for c in chunks]))
        resolved = [item for part in parts for item in part]
    by_g: dict[int, list[int]] = {}
    for m, g in resolved:
        by_g.setdefault(g, []).append(m)

    N = n * (n - 1) // 2
    pg_cache: dict[tuple[int, int], bool] = {}

    def is_pg_free(m: int, g: int) -> bool:
        for q in prime_divisors(m):
            key = (g, q)
            hit = pg_cache.get(key)
            if hit is None:
                hit = in_Pg(q, g, N)
                pg_cache[key] = hit
            if hit:
                return False
        return True

    rows = []
    members: list[tuple[int, int, bool]] = []
    for g in sorted(by_g):
        ms = sorted(by_g[g], key=abs)
        flags = [is_pg_free(m, g) for m in ms]
        members.extend((g, m, f) for m, f in zip(ms, flags))
        abs_ms = [abs(m) for m in ms]
        free_prefix = np.cumsum(np.array(flags, dtype=np.int64)) if ms else np.array([], dtype=np.int64)
        totals = []
        frees = []
        for x in xs:
            hi = bisect_right(abs_ms, x)
            totals.append(hi)
            frees.append(int(free_prefix[hi - 1]) if hi else 0)
        rows.append(ExceptionalRow(g=g, totals=tuple(totals), pg_free=tuple(frees)))
    return ExceptionalScanReport(n=n, xs=xs, rows=tuple(rows), members=tuple(members))
