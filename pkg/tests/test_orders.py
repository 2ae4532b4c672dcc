import random

import pytest

from eosieve.errors import ContainmentError, EnumerationLimitError, NotClosedError
from eosieve.orders import (
    EquationOrder,
    MonicPolynomial,
    equation_order_index,
    index_form_value,
    multiplication_table,
    order_disc,
    order_index,
    p_saturate,
    p_saturate_enumeration,
    poly_disc_resultant,
)
from eosieve.purefield import pure_poly, pure_power_disc

X4_13 = pure_poly(4, 13)
MAX13_ROWS = ((2, 0, 0, 0), (0, 2, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1))


def test_multiplication_table_power_basis_quadratic():
    order = EquationOrder.power_order(pure_poly(2, 5))
    table = multiplication_table(order)
    assert table[1][1] == (5, 0)  # theta^2 = 5
    assert table[0][1] == (0, 1)


def test_multiplication_table_m13_integral_basis():
    order = EquationOrder.from_basis(X4_13, MAX13_ROWS, 2)
    table = multiplication_table(order)
    for i in range(4):
        for j in range(4):
            assert all(isinstance(c, int) for c in table[i][j])


def test_multiplication_table_non_ring():
    rows = ((2, 0), (0, 1))  # {1, theta/2} for x^2 - 5
    order = EquationOrder.from_basis(pure_poly(2, 5), rows, 2)
    with pytest.raises(NotClosedError) as err:
        multiplication_table(order)
    assert err.value.pair == (1, 1)


def test_index_form_identity_and_translation():
    order = EquationOrder.power_order(X4_13)
    assert index_form_value(order, (0, 1, 0, 0)).value == 1
    assert index_form_value(order, (7, 1, 0, 0)).value == 1


def test_index_form_homogeneity_example():
    order = EquationOrder.power_order(X4_13)
    assert index_form_value(order, (0, 2, 0, 0)).value == 2**6


def test_index_form_orientation_sign():
    order = EquationOrder.power_order(X4_13)
    beta = (3, 2, 1, 0)
    plus = index_form_value(order, beta, orientation_sign=1)
    minus = index_form_value(order, beta, orientation_sign=-1)
    assert plus.value == -minus.value
    assert abs(plus.value) == abs(minus.value)


def test_index_form_random_invariances():
    rng = random.Random(12345)
    orders = [
        EquationOrder.power_order(X4_13),
        EquationOrder.from_basis(X4_13, MAX13_ROWS, 2),
        EquationOrder.power_order(pure_poly(5, 7)),
    ]
    for _ in range(1000):
        order = rng.choice(orders)
        n = order.degree
        N = n * (n - 1) // 2
        beta = tuple(rng.randrange(-4, 5) for _ in range(n))
        base = index_form_value(order, beta).value
        c = rng.randrange(-10, 11)
        shifted = (beta[0] + c,) + beta[1:]
        assert index_form_value(order, shifted).value == base
        u = rng.choice([-3, -2, -1, 2, 3])
        scaled = tuple(u * b for b in beta)
        assert index_form_value(order, scaled).value == u**N * base


def test_unit_wedge_generation():
    # powers of beta with |index form value| = 1 must span the order
    order = EquationOrder.power_order(pure_poly(4, 2))
    n = 4
    table = multiplication_table(order)
    for beta in [(5, 1, 0, 0), (-3, -1, 0, 0)]:
        assert abs(index_form_value(order, beta).value) == 1
        rows = [[1, 0, 0, 0]]
        cur = rows[0]
        for _ in range(n - 1):
            nxt = [0] * n
            for i, ui in enumerate(cur):
                if ui:
                    for j, vj in enumerate(beta):
                        if vj:
                            for k in range(n):
                                nxt[k] += ui * vj * table[i][j][k]
            rows.append(nxt)
            cur = nxt
        powers_order = EquationOrder.from_basis(order.poly, rows, 1)
        assert powers_order == order
    # and a non-unit value must not span
    assert abs(index_form_value(order, (0, 2, 0, 0)).value) != 1
    sub = EquationOrder.from_basis(order.poly, [[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 4, 0], [0, 0, 0, 8]], 1)
    assert order_index(sub, order) == 64


def test_order_index_examples():
    power = EquationOrder.power_order(X4_13)
    doubled = EquationOrder.from_basis(
        X4_13, [[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 4, 0], [0, 0, 0, 8]], 1
    )
    assert order_index(doubled, power) == 64
    assert order_index(power, power) == 1
    maximal = EquationOrder.from_basis(X4_13, MAX13_ROWS, 2)
    assert order_index(power, maximal) == 4
    with pytest.raises(ContainmentError):
        order_index(maximal, power)


@pytest.mark.parametrize("c", [2, 3])
@pytest.mark.parametrize("n", [4, 5])
def test_order_index_diagonal_scaling(c, n):
    poly = pure_poly(n, 7)
    power = EquationOrder.power_order(poly)
    rows = [[c**i if j == i else 0 for j in range(n)] for i in range(n)]
    sub = EquationOrder.from_basis(poly, rows, 1)
    assert order_index(sub, power) == c ** (n * (n - 1) // 2)


def test_order_disc_examples():
    power = EquationOrder.power_order(X4_13)
    assert order_disc(power) == pure_power_disc(4, 13)
    maximal = EquationOrder.from_basis(X4_13, MAX13_ROWS, 2)
    assert order_disc(maximal) == order_disc(power) // 16
    assert order_disc(EquationOrder.power_order(pure_poly(2, 5))) == 20


def test_poly_disc_resultant_examples():
    assert poly_disc_resultant(X4_13) == pure_power_disc(4, 13)
    assert poly_disc_resultant(MonicPolynomial((5, 5, 0, 0))) == 5**3 * (256 - 27 * 5)
    assert poly_disc_resultant(MonicPolynomial((1, 1))) == -3


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
def test_disc_three_way_agreement(n):
    # trace form == closed form == resultant, for pure polynomials
    for m in (-15, -7, -2, 3, 10, 21):
        poly = pure_poly(n, m)
        closed = pure_power_disc(n, m)
        assert poly_disc_resultant(poly) == closed
        assert order_disc(EquationOrder.power_order(poly)) == closed


def test_p_saturate_examples():
    power = EquationOrder.power_order(X4_13)
    sat = p_saturate(power, 2)
    assert sat == EquationOrder.from_basis(X4_13, MAX13_ROWS, 2)
    assert order_index(power, sat) == 4
    power2 = EquationOrder.power_order(pure_poly(4, 2))
    assert p_saturate(power2, 2) == power2
    assert p_saturate(power, 13) == power  # Eisenstein prime: already maximal there


def test_p_saturate_idempotent():
    for n, m, p in [(4, 13, 2), (4, 73, 2), (5, 7, 5), (6, 19, 3)]:
        power = EquationOrder.power_order(pure_poly(n, m))
        once = p_saturate(power, p)
        assert p_saturate(once, p) == once


def test_saturation_matches_enumeration_oracle():
    # brute-force candidate enumeration, the algorithm of record for small p
    cases = [(2, m, p) for m in (-11, -7, 5, 13, 17, 21, 33) for p in (2, 3)]
    cases += [(3, m, p) for m in (-10, -7, 6, 10, 17, 19, 26) for p in (2, 3)]
    cases += [(4, m, p) for m in (-15, -7, -3, 5, 13, 17, 33, 73) for p in (2, 3)]
    cases += [(4, 3, 5), (5, 7, 5), (5, -5, 3), (6, 17, 2), (6, 17, 3)]
    for n, m, p in cases:
        poly = pure_poly(n, m)
        power = EquationOrder.power_order(poly)
        assert p_saturate(power, p) == p_saturate_enumeration(power, p), (n, m, p)


def test_saturation_matches_enumeration_on_trinomials():
    from eosieve.families import trinomial_poly

    for n, t, p in [(4, 3, 3), (4, 3, 5), (4, 5, 5), (4, -10, 2), (5, -5, 3)]:
        poly = trinomial_poly(n, t)
        power = EquationOrder.power_order(poly)
        assert p_saturate(power, p) == p_saturate_enumeration(power, p), (n, t, p)


def test_enumeration_resource_limit():
    power = EquationOrder.power_order(pure_poly(4, 13))
    with pytest.raises(EnumerationLimitError):
        p_saturate_enumeration(power, 499, enumeration_limit=2**24)


def test_equation_order_index_examples():
    g, maximal = equation_order_index(X4_13, [2])
    assert g == 4
    assert order_disc(maximal) == pure_power_disc(4, 13) // 16
    g, _ = equation_order_index(pure_poly(4, 2), [2])
    assert g == 1
    g, _ = equation_order_index(pure_poly(4, 73), [2])
    assert g == 8  # fixed by the enumeration oracle and the discriminant identity


def test_discriminant_index_identity_grid():
    for n, m in [(4, 13), (4, 73), (4, -3), (5, 7), (5, 11), (6, 17), (6, -15)]:
        from eosieve.arith import prime_divisors

        poly = pure_poly(n, m)
        power = EquationOrder.power_order(poly)
        g, maximal = equation_order_index(poly, prime_divisors(n))
        assert order_disc(power) == g * g * order_disc(maximal)


def test_sympy_round_two_cross_check():
    sympy = pytest.importorskip("sympy")
    from sympy.abc import x as sx
    from sympy.polys.numberfields.basis import round_two

    from eosieve.arith import prime_divisors

    for n, m in [(4, 13), (4, 73), (4, -3), (5, 7), (6, 17), (8, 5)]:
        g, maximal = equation_order_index(pure_poly(n, m), prime_divisors(n))
        try:
            _, d_field = round_two(sympy.Poly(sx**n - m))
        except Exception:
            continue  # round_two crashes on some inputs; skip those
        assert order_disc(maximal) == d_field, (n, m)


def test_from_basis_canonicalization():
    # generating sets that span the same lattice give equal orders
    a = EquationOrder.from_basis(X4_13, MAX13_ROWS, 2)
    shuffled = (MAX13_ROWS[3], MAX13_ROWS[1], MAX13_ROWS[0], MAX13_ROWS[2])
    b = EquationOrder.from_basis(X4_13, shuffled, 2)
    mixed = tuple(
        tuple(x + y for x, y in zip(MAX13_ROWS[i], MAX13_ROWS[0])) for i in range(4)
    )
    c = EquationOrder.from_basis(X4_13, MAX13_ROWS + mixed, 2)
    assert a == b == c
    assert a.basis_numerators[0] == (2, 0, 0, 0)


def test_from_basis_rejects_bad_lattices():
    with pytest.raises(ValueError):
        EquationOrder.from_basis(X4_13, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0)), 1)
    with pytest.raises(ValueError):
        # does not contain 1 primitively
        EquationOrder.from_basis(X4_13, ((2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)), 4)
