"""Exact integer polynomials in ``q`` and the q-hook-content machinery.

Throughout, ``[k]`` denotes ``1 - q**k`` and ``[k]!`` the product ``[k][k-1]...[1]``.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .core import KNTableau, Partition, Weight, as_partition


class InexactDivision(ArithmeticError):
    """A polynomial division that was required to be exact left a remainder."""


class NonIntegralValue(ArithmeticError):
    """A polynomial takes a non-integer value at a root of unity."""

    def __init__(self, message: str, residue: IntPoly):
        super().__init__(message)
        self.residue = residue


class IntPoly:
    """Polynomial in one variable with arbitrary-precision integer coefficients.

    Stored sparsely as ``{degree: coefficient}`` with no zero coefficients.
    Instances are treated as immutable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Sequence[int] | int = ()):
        if isinstance(coeffs, int):
            items: Iterable[tuple[int, int]] = [(0, coeffs)]
        elif isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        c: dict[int, int] = {}
        for d, a in items:
            if d < 0:
                raise ValueError(f"negative degree {d}")
            if a:
                c[int(d)] = c.get(int(d), 0) + int(a)
        self._c = {d: a for d, a in sorted(c.items()) if a}
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> IntPoly:
        p = cls.__new__(cls)
        p._c = {d: c[d] for d in sorted(c) if c[d]}
        p._hash = None
        return p

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls({degree: coeff})

    @classmethod
    def bracket(cls, k: int) -> IntPoly:
        """``[k] = 1 - q^k``."""
        if k <= 0:
            raise ValueError(f"[k] needs k >= 1, got {k}")
        return cls({0: 1, k: -1})

    @classmethod
    def bracket_factorial(cls, k: int) -> IntPoly:
        out = ONE
        for j in range(1, k + 1):
            out = out * cls.bracket(j)
        return out

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, degree: int) -> int:
        return self._c.get(degree, 0)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return max(self._c) if self._c else -1

    @property
    def lowest_degree(self) -> int:
        return min(self._c) if self._c else -1

    def is_zero(self) -> bool:
        return not self._c

    def dense(self, length: int | None = None) -> list[int]:
        n = self.degree + 1 if length is None else length
        return [self._c.get(d, 0) for d in range(n)]

    def items(self):
        return self._c.items()

    def __call__(self, x):
        return sum(a * x**d for d, a in self._c.items())

    def coefficient_sum(self) -> int:
        return sum(self._c.values())

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = _lift(other)
        c = dict(self._c)
        for d, a in other._c.items():
            c[d] = c.get(d, 0) + a
        return IntPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly._raw({d: -a for d, a in self._c.items()})

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-_lift(other))

    def __rsub__(self, other: IntPoly | int) -> IntPoly:
        return _lift(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        other = _lift(other)
        c: dict[int, int] = {}
        for d1, a1 in self._c.items():
            for d2, a2 in other._c.items():
                c[d1 + d2] = c.get(d1 + d2, 0) + a1 * a2
        return IntPoly._raw(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``q^k`` (``k`` may be negative if no coefficient would drop below degree 0)."""
        if self._c and min(self._c) + k < 0:
            raise ValueError(f"shift by {k} produces negative degrees")
        return IntPoly._raw({d + k: a for d, a in self._c.items()})

    def divmod(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Division by a polynomial whose leading coefficient is ±1, or exact over ℤ."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        dd = other.degree
        lead = other._c[dd]
        rem = dict(self._c)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top < dd:
                break
            a = rem[top]
            if a % lead:
                raise InexactDivision(f"leading coefficient {a} not divisible by {lead}")
            k = a // lead
            quot[top - dd] = k
            for d, b in other._c.items():
                e = d + top - dd
                v = rem.get(e, 0) - k * b
                if v:
                    rem[e] = v
                else:
                    rem.pop(e, None)
        return IntPoly._raw(quot), IntPoly._raw(rem)

    def exact_div(self, other: IntPoly) -> IntPoly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InexactDivision(f"remainder {r} dividing {self} by {other}")
        return q

    def __floordiv__(self, other: IntPoly) -> IntPoly:
        return self.exact_div(_lift(other))

    def __mod__(self, other: IntPoly) -> IntPoly:
        return self.divmod(_lift(other))[1]

    # -- output -------------------------------------------------------------

    def to_pairs(self) -> list[list]:
        """JSON form: ``[[degree, "coefficient"], ...]``, degrees ascending."""
        return [[d, str(a)] for d, a in self._c.items()]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence]) -> IntPoly:
        return cls({int(d): int(a) for d, a in pairs})

    def __repr__(self) -> str:
        return f"IntPoly({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for d, a in sorted(self._c.items(), reverse=True):
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if d == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("q" if d == 1 else f"q^{d}")
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        return out + "".join(f" {s} {b}" for s, b in parts[1:])


def _lift(x: IntPoly | int) -> IntPoly:
    return x if isinstance(x, IntPoly) else IntPoly(x)


ZERO = IntPoly()
ONE = IntPoly(1)
Q = IntPoly.monomial(1)


def bracket_product(indices: Iterable[int]) -> IntPoly:
    out = ONE
    for k in indices:
        out = out * IntPoly.bracket(k)
    return out


# ---------------------------------------------------------------------------
# pwr statistic


def pwr_rows(rows: Iterable[Iterable[int]], m: int) -> int:
    # rank r <= m is the letter r (exponent r-1); rank r > m is the bar of 2m+1-r (exponent r-1 as well)
    return sum(x - 1 for row in rows for x in row)


def pwr_tab(t: KNTableau) -> int:
    """``q^{i-1}`` per entry ``i`` and ``q^{2m-i}`` per entry ``ī``; in ranks this is ``rank - 1``."""
    return pwr_rows(t.rows, t.m)


def pwr_wt(chi: Sequence[int], n: int, m: int | None = None) -> int:
    """pwr of any tableau with ``n`` boxes and weight ``chi``."""
    m = len(chi) if m is None else m
    if len(chi) != m:
        raise ValueError(f"weight {tuple(chi)} has length {len(chi)}, expected {m}")
    total = sum(chi)
    excess = n - total
    if excess % 2 or not 0 <= excess // 2 <= n:
        raise ValueError(f"weight {tuple(chi)} impossible for {n} boxes (n - sum = {excess})")
    return sum(i * c for i, c in enumerate(chi)) + (2 * m - 1) * excess // 2


def x_poly(tableaux: Iterable[KNTableau]) -> IntPoly:
    """``X(q) = sum of q^pwr(T)``."""
    return IntPoly(Counter(pwr_tab(t) for t in tableaux))


def x_poly_from_weights(weights: Mapping[Weight, int], n: int, m: int) -> IntPoly:
    c: Counter = Counter()
    for chi, k in weights.items():
        c[pwr_wt(chi, n, m)] += k
    return IntPoly(c)


# ---------------------------------------------------------------------------
# hook-content formula


def _check(shape: Partition, m: int) -> None:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if shape.length > m:
        raise ValueError(f"shape {shape} has more than m={m} rows")


def hook_content_factors(shape: Partition | Iterable[int], m: int) -> tuple[list[int], list[int]]:
    """Numerator ``2m + r(i,j)`` and denominator ``h(i,j)`` over the cells."""
    shape = as_partition(shape)
    _check(shape, m)
    cells = shape.cells()
    return [2 * m + shape.r_value(c) for c in cells], [shape.hook(c) for c in cells]


def hook_content_count(shape: Partition | Iterable[int], m: int) -> int:
    num, den = hook_content_factors(shape, m)
    a, b = math.prod(num), math.prod(den)
    if a % b:
        raise InexactDivision(f"hook-content product {a}/{b} is not an integer")
    return a // b


def f_sp(shape: Partition | Iterable[int], m: int) -> IntPoly:
    """q-analogue of the symplectic hook-content formula."""
    num, den = hook_content_factors(shape, m)
    if min(num, default=1) <= 0:
        raise ValueError(f"nonpositive factor in {num}")
    top, bottom = Counter(num), Counter(den)
    common = top & bottom
    top -= common
    bottom -= common
    return bracket_product(top.elements()).exact_div(bracket_product(bottom.elements()))


# ---------------------------------------------------------------------------
# determinants


def staircase_parts(shape: Partition | Iterable[int], m: int) -> tuple[int, ...]:
    """``mu_i = lambda_i + m - i`` for ``i = 1..m``."""
    shape = as_partition(shape)
    _check(shape, m)
    return tuple(shape.part(i) + m - i for i in range(1, m + 1))


def symplectic_matrix(mu: Sequence[int], m: int) -> list[list[IntPoly]]:
    """Entries ``q^{(j-1)(mu_i+1)} - q^{(2m-j)(mu_i+1)}``, 0-based storage of 1-based formula."""
    return [
        [
            IntPoly({(j - 1) * (mu[i - 1] + 1): 1}) - IntPoly({(2 * m - j) * (mu[i - 1] + 1): 1})
            for j in range(1, m + 1)
        ]
        for i in range(1, m + 1)
    ]


def bareiss_det(matrix: Sequence[Sequence[IntPoly]]) -> IntPoly:
    """Fraction-free Gaussian elimination; every division is exact."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def leibniz_det(matrix: Sequence[Sequence[IntPoly]]) -> IntPoly:
    """Determinant by expansion over all permutations."""
    n = len(matrix)
    total = ZERO
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = ONE
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
        total = total - term if inversions % 2 else total + term
    return total


def numerator_det(shape: Partition | Iterable[int], m: int) -> IntPoly:
    return bareiss_det(symplectic_matrix(staircase_parts(shape, m), m))


def denominator_det(m: int) -> IntPoly:
    return numerator_det(Partition(()), m)


def determinant_poly(shape: Partition | Iterable[int], m: int) -> IntPoly:
    """``sum_T q^pwr(T)`` as a quotient of two determinants."""
    return numerator_det(shape, m).exact_div(denominator_det(m))


def closed_form_det(mu: Sequence[int], m: int) -> IntPoly:
    """Product form of the determinant with rows indexed by ``mu``."""
    mu = tuple(mu)
    if len(mu) != m or any(a <= b for a, b in zip(mu, mu[1:])) or (mu and mu[-1] < 0):
        raise ValueError(f"staircase parts must be {m} strictly decreasing nonnegative integers: {mu}")
    shift = sum(i * (x + 1) for i, x in enumerate(mu))
    factors = [x + 1 for x in mu]
    for i, j in itertools.combinations(range(m), 2):
        factors += [mu[i] - mu[j], mu[i] + mu[j] + 2]
    return bracket_product(factors).shift(shift)


def denominator_closed_form(m: int) -> IntPoly:
    """``q^{sum (i-1)(m-i+1)} prod [2i-1]!``."""
    shift = sum((i - 1) * (m - i + 1) for i in range(1, m + 1))
    out = ONE
    for i in range(1, m + 1):
        out = out * IntPoly.bracket_factorial(2 * i - 1)
    return out.shift(shift)


# ---------------------------------------------------------------------------
# roots of unity


def reduce_mod_cyclic(p: IntPoly, n: int) -> IntPoly:
    """Remainder of ``p`` modulo ``q^n - 1``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    c: dict[int, int] = {}
    for d, a in p.items():
        c[d % n] = c.get(d % n, 0) + a
    return IntPoly(c)


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """``Phi_n`` by dividing ``q^n - 1`` by ``Phi_d`` for proper divisors ``d``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    p = IntPoly({n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            p = p.exact_div(cyclotomic(d))
    return p


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class CyclotomicContext:
    order: int

    def __post_init__(self):
        prod = ONE
        for e in divisors(self.order):
            prod = prod * cyclotomic(e)
        if prod != IntPoly({self.order: 1, 0: -1}):
            raise ArithmeticError(f"cyclotomic factors of q^{self.order} - 1 do not multiply back")

    @property
    def factors(self) -> dict[int, IntPoly]:
        return {e: cyclotomic(e) for e in divisors(self.order)}

    def root_order(self, d: int) -> int:
        """Multiplicative order of ``omega^d`` for a primitive ``order``-th root ``omega``."""
        return self.order // math.gcd(d, self.order)

    def residue(self, p: IntPoly, d: int) -> IntPoly:
        return p % cyclotomic(self.root_order(d))

    def evaluate(self, p: IntPoly, d: int) -> int:
        r = self.residue(p, d)
        if r.degree > 0:
            raise NonIntegralValue(f"{p} at omega^{d} (omega of order {self.order}) is not an integer; residue {r}", r)
        return r[0]


def eval_at_root(p: IntPoly, n: int, d: int) -> int:
    """Exact value of ``p(omega^d)`` for a primitive ``n``-th root of unity ``omega``."""
    return CyclotomicContext(n).evaluate(p, d)
