import os
from concurrent.futures import ProcessPoolExecutor

import pytest

from eosieve.arith import is_squarefree, prime_divisors, vp
from eosieve.errors import ConsistencyError
from eosieve.experiments import _scan_chunk
from eosieve.orders import poly_disc_resultant
from eosieve.purefield import (
    PureFieldInvariants,
    PureFieldParams,
    alpha_monogenic,
    binomial_irreducible,
    pure_index,
    pure_maximal_order,
    pure_poly,
    pure_power_disc,
)

WORKERS = min(4, os.cpu_count() or 1)


def test_params_basics():
    p = PureFieldParams(4, 13)
    assert p.N == 6
    with pytest.raises(ValueError):
        PureFieldParams(1, 5)
    with pytest.raises(ValueError):
        PureFieldParams(4, 1)


def test_binomial_irreducible_examples():
    assert binomial_irreducible(4, 13)
    assert not binomial_irreducible(4, 16)
    assert not binomial_irreducible(4, -4)  # x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
    assert not binomial_irreducible(6, -8)
    assert not binomial_irreducible(2, 9)
    assert binomial_irreducible(8, -64 * 4)  # -256 = -4*(2)^4 reducible? no: k^4=64 has no integer k
    assert not binomial_irreducible(4, -64)  # -4 * 2^4
    assert not binomial_irreducible(9, -8)  # (-2)^3


def test_alpha_monogenic_examples():
    assert alpha_monogenic(4, 2)
    assert not alpha_monogenic(4, 73)
    assert not alpha_monogenic(4, 13)
    with pytest.raises(ValueError):
        alpha_monogenic(4, 16)


def test_alpha_monogenic_mod4_equivalence():
    for m in range(-300, 300):
        if abs(m) <= 1 or not is_squarefree(m):
            continue
        assert alpha_monogenic(4, m) == (m % 4 != 1), m


def test_pure_power_disc():
    assert pure_power_disc(4, 13) == -562432
    assert abs(pure_power_disc(4, 13)) == 4**4 * 13**3
    assert pure_power_disc(2, 5) == 20
    assert pure_power_disc(4, 13) == poly_disc_resultant(pure_poly(4, 13))
    assert pure_power_disc(5, 7) == poly_disc_resultant(pure_poly(5, 7))


def test_pure_index_examples():
    assert pure_index(4, 13).g == 4
    assert pure_index(4, 2).g == 1
    # both engines agree on g = 5 here; the congruence criterion rules out 1
    # because v_5(7^5 - 7) = 2
    assert vp(7**5 - 7, 5) == 2
    assert pure_index(5, 7).g == 5
    assert pure_index(4, 73).g == 8


def test_pure_index_invariants_enforced():
    with pytest.raises(ConsistencyError):
        PureFieldInvariants(
            params=PureFieldParams(4, 13),
            irreducible=True,
            alpha_monogenic=True,
            g=4,
            power_disc=-562432,
        )
    with pytest.raises(ConsistencyError):
        PureFieldInvariants(
            params=PureFieldParams(4, 13),
            irreducible=True,
            alpha_monogenic=False,
            g=3,  # 9 does not divide 256
            power_disc=-562432,
        )


def test_eisenstein_primes_do_not_divide_g():
    for n, m in [(4, 13), (4, 73), (5, 7), (6, 35), (6, -21)]:
        g = pure_index(n, m).g
        for q in prime_divisors(m):
            assert g % q != 0


def test_g_divisibility_bounds():
    for n, m in [(4, 13), (4, 73), (4, -3), (5, 7), (6, 17), (6, -15), (8, 5)]:
        g = pure_index(n, m).g
        assert (n**n) % (g * g) == 0
        for p in prime_divisors(g) if g > 1 else []:
            assert n % p == 0
            assert 2 * vp(g, p) <= n * vp(n, p)


def test_vp_growth_inequality():
    for n in range(5, 65):
        for p in prime_divisors(n):
            assert vp(n, p) < (n - 1) / 2


@pytest.mark.parametrize("n", [4, 5, 6])
def test_criterion_matches_saturation_to_1e4(n):
    """alpha_monogenic(n, m) iff pure_index(n, m).g == 1 for |m| <= 1e4."""
    limit = 10**4
    values = []
    for k in range(2, limit + 1):
        for m in (k, -k):
            if is_squarefree(m) and binomial_irreducible(n, m):
                values.append(m)
    chunks = [values[i::WORKERS] for i in range(WORKERS)]
    if WORKERS == 1:
        parts = [_scan_chunk((n, values))]
    else:
        with ProcessPoolExecutor(max_workers=WORKERS) as pool:
            parts = list(pool.map(_scan_chunk, [(n, c) for c in chunks]))
    mism = []
    for part in parts:
        for m, g in part:
            if alpha_monogenic(n, m) != (g == 1):
                mism.append((m, g))
    assert not mism, f"criterion/saturation mismatches at n={n}: {mism[:10]}"


def test_observed_index_values_quartic():
    # attainable indices are materialized empirically, never assumed
    observed = {}
    for m in range(-400, 401):
        if abs(m) <= 1 or not is_squarefree(m):
            continue
        g = pure_index(4, m).g
        observed.setdefault(g, 0)
        observed[g] += 1
    assert set(observed) <= {1, 2, 4, 8, 16}
    assert observed[1] > 0 and observed[4] > 0 and observed[8] > 0
    # every g observed divides 4^2 and squares into 4^4
    for g in observed:
        assert 256 % (g * g) == 0


def test_discriminant_index_identity_everywhere():
    from eosieve.orders import EquationOrder, order_disc

    for n in (4, 5, 6):
        for m in (-19, -6, 7, 15, 33):
            if not (is_squarefree(m) and binomial_irreducible(n, m)):
                continue
            g, maximal = pure_maximal_order(n, m)
            power = EquationOrder.power_order(pure_poly(n, m))
            assert order_disc(power) == g * g * order_disc(maximal)
            assert order_disc(power) == pure_power_disc(n, m)
