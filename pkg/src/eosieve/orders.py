"""Exact arithmetic in equation orders of Q[x]/(f) for monic integer f.

An order is a full-rank lattice, closed under multiplication, inside the
rational vector space spanned by the power basis 1, θ, ..., θ^(n-1).  Bases
are kept in a canonical lower-triangular Hermite form over a common
denominator, so lattice equality is plain structural equality.

Saturation at a prime p enlarges an order by the elements of p-power
denominator that are integral, iterating one enlargement round until stable.
The default round computes the multiplier ring of the p-radical (linear
algebra mod p); `p_saturate_enumeration` implements the brute-force round
that adjoins every integral element of denominator p and serves as the
correctness oracle for small p.  Both rounds share the same fixed points
(an order admits no integral element of denominator p outside itself
exactly when it is p-maximal), so the two paths converge to the same order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ConsistencyError, ContainmentError, EnumerationLimitError, NotClosedError

__all__ = [
    "EquationOrder",
    "IndexFormValue",
    "MonicPolynomial",
    "equation_order_index",
    "index_form_value",
    "multiplication_table",
    "order_disc",
    "order_index",
    "p_saturate",
    "p_saturate_enumeration",
    "poly_disc_resultant",
]


@dataclass(frozen=True)
class MonicPolynomial:
    """x^n + c_{n-1} x^{n-1} + ... + c_0, stored by its low coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("degree must be at least 2")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def derivative_coeffs(self) -> list[int]:
        """Ascending coefficients of f', leading coefficient n included."""
        n = self.degree
        return [i * self.coeffs[i] for i in range(1, n)] + [n]

    def __str__(self) -> str:
        n = self.degree
        parts = [f"x^{n}"]
        for i in range(n - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            coef = "" if (mag == 1 and i > 0) else str(mag)
            parts.append(("- " if c < 0 else "+ ") + coef + term)
        return " ".join(parts)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _hnf(rows: list[list[int]], n: int) -> list[list[int]]:
    """Lower-triangular row Hermite form with positive pivots.

    Input rows must span a rank-n lattice; off-pivot entries are reduced
    into [0, pivot).
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    basis: list[list[int]] = []
    for j in range(n - 1, -1, -1):
        pivot_row = None
        remaining = []
        for r in work:
            if r[j] == 0:
                remaining.append(r)
            elif pivot_row is None:
                pivot_row = r
            else:
                a, b = pivot_row[j], r[j]
                g, u, v = _xgcd(a, b)
                ag, bg = a // g, b // g
                new_pivot = [u * x + v * y for x, y in zip(pivot_row, r)]
                new_rest = [ag * y - bg * x for x, y in zip(pivot_row, r)]
                pivot_row = new_pivot
                if any(new_rest):
                    remaining.append(new_rest)
        if pivot_row is None:
            raise ValueError("rows do not span a full-rank lattice")
        if pivot_row[j] < 0:
            pivot_row = [-x for x in pivot_row]
        basis.append(pivot_row)
        work = remaining
    basis.reverse()
    for i in range(1, n):
        for j in range(i - 1, -1, -1):
            q = basis[i][j] // basis[j][j]
            if q:
                bj = basis[j]
                basis[i] = [x - q * y for x, y in zip(basis[i], bj)]
    return basis


def _bareiss_det(rows: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[-1][-1]


def poly_disc_resultant(poly: MonicPolynomial) -> int:
    """Discriminant via (-1)^(n(n-1)/2) Res(f, f'), by exact elimination."""
    n = poly.degree
    f_desc = [1] + [poly.coeffs[i] for i in range(n - 1, -1, -1)]
    fp = poly.derivative_coeffs()
    g_desc = [fp[i] for i in range(n - 1, -1, -1)]
    size = 2 * n - 1
    syl = []
    for shift in range(n - 1):
        syl.append([0] * shift + f_desc + [0] * (size - shift - n - 1))
    for shift in range(n):
        syl.append([0] * shift + g_desc + [0] * (size - shift - n))
    res = _bareiss_det(syl)
    return (-1) ** (n * (n - 1) // 2) * res


def _reduce_mod_poly(coeffs: list, poly: MonicPolynomial) -> list:
    """Reduce a coefficient list modulo the monic poly (works for int or Fraction)."""
    n = poly.degree
    c = list(coeffs) + [0] * max(0, n - len(coeffs))
    f = poly.coeffs
    for k in range(len(c) - 1, n - 1, -1):
        top = c[k]
        if top:
            for i in range(n):
                c[k - n + i] -= top * f[i]
        c.pop()
    return c


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _solve_lower_triangular(rows, rhs):
    """Solve c . rows = rhs for a lower-triangular integer basis (Fraction result)."""
    n = len(rows)
    c = [Fraction(0)] * n
    for j in range(n - 1, -1, -1):
        s = Fraction(rhs[j])
        for i in range(j + 1, n):
            if rows[i][j]:
                s -= c[i] * rows[i][j]
        c[j] = s / rows[j][j]
    return c


def _solve_lower_triangular_int(rows, rhs) -> list[int]:
    n = len(rows)
    c = [0] * n
    for j in range(n - 1, -1, -1):
        s = rhs[j]
        for i in range(j + 1, n):
            if rows[i][j]:
                s -= c[i] * rows[i][j]
        q, r = divmod(s, rows[j][j])
        if r:
            raise ConsistencyError("expected integral coordinates in ideal basis")
        c[j] = q
    return c


@dataclass(frozen=True)
class EquationOrder:
    """A multiplication-closed full lattice in Q[x]/(f), in canonical form.

    Rows of `basis_numerators` divided by `denominator` are the basis
    elements in power-basis coordinates; row 0 is always the element 1.
    """

    poly: MonicPolynomial
    basis_numerators: tuple[tuple[int, ...], ...]
    denominator: int

    @classmethod
    def power_order(cls, poly: MonicPolynomial) -> "EquationOrder":
        n = poly.degree
        rows = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return cls(poly, rows, 1)

    @classmethod
    def from_basis(cls, poly: MonicPolynomial, rows, denominator: int = 1) -> "EquationOrder":
        """Canonicalize generating rows (over a common denominator) into an order basis."""
        if denominator < 1:
            raise ValueError("denominator must be positive")
        n = poly.degree
        int_rows = [list(map(int, r)) for r in rows]
        if any(len(r) != n for r in int_rows):
            raise ValueError("rows must have length equal to the degree")
        g = denominator
        for r in int_rows:
            for x in r:
                g = math.gcd(g, x)
        if g > 1:
            denominator //= g
            int_rows = [[x // g for x in r] for r in int_rows]
        hnf = _hnf(int_rows, n)
        if hnf[0] != [denominator] + [0] * (n - 1):
            raise ValueError("lattice must contain 1 as a primitive element")
        return cls(poly, tuple(tuple(r) for r in hnf), denominator)

    @property
    def degree(self) -> int:
        return self.poly.degree

    def is_power_order(self) -> bool:
        n = self.degree
        return self.denominator == 1 and all(
            self.basis_numerators[i][j] == (1 if i == j else 0)
            for i in range(n)
            for j in range(n)
        )

    def basis_element(self, i: int) -> tuple[Fraction, ...]:
        """Power-basis coordinates of basis element i."""
        return tuple(Fraction(x, self.denominator) for x in self.basis_numerators[i])

    def coordinates(self, power_coords) -> tuple[Fraction, ...]:
        """Coordinates in this basis of an element given in power-basis coordinates."""
        rhs = [Fraction(x) * self.denominator for x in power_coords]
        return tuple(_solve_lower_triangular(self.basis_numerators, rhs))


@dataclass(frozen=True)
class IndexFormValue:
    """A signed index-form value relative to a chosen orientation."""

    value: int
    orientation_sign: int = 1

    def __post_init__(self):
        if self.orientation_sign not in (1, -1):
            raise ValueError("orientation_sign must be +1 or -1")


@lru_cache(maxsize=256)
def _multiplication_table_cached(order: EquationOrder):
    n = order.degree
    poly = order.poly
    if order.is_power_order():
        # theta^k reduced mod f, for k up to 2n-2
        powers = []
        cur = [0] * n
        cur[0] = 1
        powers.append(tuple(cur))
        for _ in range(2 * n - 2):
            cur = _reduce_mod_poly([0] + list(cur), poly)
            powers.append(tuple(cur))
        return tuple(tuple(powers[i + j] for j in range(n)) for i in range(n))
    rows = order.basis_numerators
    den = order.denominator
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            prod = _reduce_mod_poly(_poly_mul(list(rows[i]), list(rows[j])), poly)
            rhs = [Fraction(x, den) for x in prod]
            coords = _solve_lower_triangular(order.basis_numerators, rhs)
            if any(c.denominator != 1 for c in coords):
                raise NotClosedError(i, j)
            entry = tuple(int(c) for c in coords)
            table[i][j] = entry
            table[j][i] = entry
    return tuple(tuple(row) for row in table)


def multiplication_table(order: EquationOrder):
    """Structure constants c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k.

    Raises NotClosedError naming the first offending pair when the lattice
    is not a ring.
    """
    return _multiplication_table_cached(order)


def _mult_coords(u, v, table, n):
    w = [0] * n
    for i, ui in enumerate(u):
        if ui:
            ti = table[i]
            for j, vj in enumerate(v):
                if vj:
                    s = ui * vj
                    tij = ti[j]
                    for k in range(n):
                        if tij[k]:
                            w[k] += s * tij[k]
    return w


def index_form_value(order: EquationOrder, beta, orientation_sign: int = 1) -> IndexFormValue:
    """det of the matrix of 1, beta, ..., beta^(n-1) in the order's basis.

    `beta` is given by integer coordinates in the order's basis; the order's
    own basis defines the +1 orientation.
    """
    n = order.degree
    table = multiplication_table(order)
    beta = [int(b) for b in beta]
    rows = [[1] + [0] * (n - 1)]
    cur = rows[0]
    for _ in range(n - 1):
        cur = _mult_coords(cur, beta, table, n)
        rows.append(cur)
    det = _bareiss_det(rows)
    return IndexFormValue(value=orientation_sign * det, orientation_sign=orientation_sign)


def order_index(sub: EquationOrder, sup: EquationOrder) -> int:
    """Lattice index [sup : sub] for sub contained in sup (same polynomial)."""
    if sub.poly != sup.poly:
        raise ValueError("orders must share the same polynomial")
    T = []
    for row in sub.basis_numerators:
        rhs = [Fraction(x * sup.denominator, sub.denominator) for x in row]
        coords = _solve_lower_triangular(sup.basis_numerators, rhs)
        if any(c.denominator != 1 for c in coords):
            raise ContainmentError("suborder is not contained in superorder")
        T.append([int(c) for c in coords])
    return abs(_bareiss_det(T))


def order_disc(order: EquationOrder) -> int:
    """Determinant of the trace form Tr(e_i e_j) on the order."""
    n = order.degree
    table = multiplication_table(order)
    traces = [sum(table[k][i][i] for i in range(n)) for k in range(n)]
    gram = [
        [sum(table[i][j][k] * traces[k] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    return _bareiss_det(gram)


def _gf_nullspace(matrix: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {x : matrix . x = 0} over GF(p) (column-vector solutions)."""
    rows = [[a % p for a in row] for row in matrix]
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, m):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        v = [0] * ncols
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-rows[ri][fc]) % p
        basis.append(v)
    return basis


def _matmul_mod(a, b, p):
    n = len(a)
    m = len(b[0])
    kk = len(b)
    return [
        [sum(a[i][k] * b[k][j] for k in range(kk)) % p for j in range(m)]
        for i in range(n)
    ]


def _saturation_round(order: EquationOrder, p: int) -> EquationOrder:
    """One multiplier-ring enlargement: Mult of the p-radical of O/pO."""
    n = order.degree
    table = multiplication_table(order)

    def mul_mod(u, v):
        return [x % p for x in _mult_coords(u, v, table, n)]

    one = [1] + [0] * (n - 1)
    frob = []
    for i in range(n):
        base = [0] * n
        base[i] = 1
        acc = list(one)
        e = p
        sq = base
        while e:
            if e & 1:
                acc = mul_mod(acc, sq)
            e >>= 1
            if e:
                sq = mul_mod(sq, sq)
        frob.append(acc)
    k = 1
    while p**k < n:
        k += 1
    fk = frob
    for _ in range(k - 1):
        fk = _matmul_mod(fk, frob, p)
    # radical of O/pO: row vectors a with a . fk = 0
    fk_t = [[fk[i][j] for i in range(n)] for j in range(n)]
    radical = _gf_nullspace(fk_t, p)
    if not radical:
        return order
    ideal_rows = _hnf(
        [list(v) for v in radical] + [[p if i == j else 0 for j in range(n)] for i in range(n)],
        n,
    )
    # matrices of multiplication by e_i acting on I/pI
    mult_mats = []
    for i in range(n):
        mat = []
        for crow in ideal_rows:
            prod = _mult_coords([1 if t == i else 0 for t in range(n)], crow, table, n)
            y = _solve_lower_triangular_int(ideal_rows, prod)
            mat.append([t % p for t in y])
        mult_mats.append(mat)
    flat = []
    for j in range(n):
        for t in range(n):
            flat.append([mult_mats[i][j][t] for i in range(n)])
    kernel = _gf_nullspace(flat, p)
    if not kernel:
        return order
    u_rows = _hnf(
        [list(v) for v in kernel] + [[p if i == j else 0 for j in range(n)] for i in range(n)],
        n,
    )
    numer = [
        [sum(u_rows[i][k] * order.basis_numerators[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    return EquationOrder.from_basis(order.poly, numer, p * order.denominator)


def p_saturate(order: EquationOrder, p: int) -> EquationOrder:
    """The smallest overorder whose index in the maximal order is prime to p.

    Repeats one enlargement round until stable.  The round adjoins the
    multiplier ring of the p-radical, which strictly enlarges any order that
    still admits integral elements of denominator p and fixes exactly the
    p-maximal ones, so the loop terminates at the p-saturation.
    """
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    while True:
        bigger = _saturation_round(order, p)
        if bigger == order:
            return order
        order = bigger


def _charpoly_is_integral(rows_fr) -> bool:
    """Faddeev-LeVerrier characteristic polynomial, checked for integrality."""
    n = len(rows_fr)
    m = [[Fraction(x) for x in row] for row in rows_fr]
    ak = [row[:] for row in m]
    coeffs = []
    for step in range(1, n + 1):
        c = -sum(ak[i][i] for i in range(n)) / step
        coeffs.append(c)
        if step == n:
            break
        for i in range(n):
            ak[i][i] += c
        ak = [
            [sum(m[i][t] * ak[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return all(c.denominator == 1 for c in coeffs)


def p_saturate_enumeration(
    order: EquationOrder, p: int, enumeration_limit: int = 1 << 24
) -> EquationOrder:
    """Brute-force saturation round, iterated until stable (test oracle).

    One round scans every element (a_0 e_0 + ... + a_{n-1} e_{n-1})/p with
    a_i in [0, p) and adjoins those whose characteristic polynomial is
    integral.  Raises EnumerationLimitError when p^n exceeds the limit.
    """
    n = order.degree
    if p**n > enumeration_limit:
        raise EnumerationLimitError(
            f"candidate space {p}^{n} exceeds enumeration limit {enumeration_limit}"
        )
    while True:
        table = multiplication_table(order)
        integral = []
        for a in itertools.product(range(p), repeat=n):
            if not any(a):
                continue
            mx = [
                [
                    Fraction(sum(a[i] * table[i][j][k] for i in range(n)), p)
                    for k in range(n)
                ]
                for j in range(n)
            ]
            if _charpoly_is_integral(mx):
                integral.append(list(a))
        if not integral:
            return order
        scaled = [[p * x for x in row] for row in order.basis_numerators]
        new_rows = scaled + [
            [sum(a[i] * order.basis_numerators[i][j] for i in range(n)) for j in range(n)]
            for a in integral
        ]
        order = EquationOrder.from_basis(order.poly, new_rows, p * order.denominator)


def equation_order_index(
    poly: MonicPolynomial, candidate_primes
) -> tuple[int, EquationOrder]:
    """Index of Z[x]/(f) in its saturation at the given candidate primes.

    Returns (g, maximal_order) where g is the product of the index gains at
    each candidate.  The result is the full maximal order whenever the
    candidates cover every prime whose square divides disc(f).
    """
    power = EquationOrder.power_order(poly)
    order = power
    for p in sorted(set(int(q) for q in candidate_primes)):
        order = p_saturate(order, p)
    return order_index(power, order), order
