"""Exact arithmetic kernel: rationals, the ring Q(sqrt3), fraction-free
determinants, and the minor/coefficient sequences of the two tridiagonal
fold blocks.

The fold blocks have irrational couplings (-1/sqrt35 at the ends), but every
principal minor is rational because couplings only ever enter a determinant
as the opposite-pair product. All exact work therefore happens on the
"rationalized" image of a block: upper couplings carry the pair product
(1/35 or 1/49), lower couplings carry 1. Any principal submatrix of that
image has the same determinant as the corresponding submatrix of the block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ConsistencyError, InvalidParameterError

Rational = Fraction


# ---------------------------------------------------------------------------
# Q(sqrt3)


@dataclass(frozen=True)
class QuadSurd:
    """Exact element p + q*sqrt(3) with rational p, q."""

    p: Fraction
    q: Fraction = Fraction(0)

    @staticmethod
    def of(p, q=0) -> "QuadSurd":
        return QuadSurd(Fraction(p), Fraction(q))

    def _coerce(self, other) -> "QuadSurd":
        if isinstance(other, QuadSurd):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadSurd(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadSurd(self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadSurd(self.p - o.p, self.q - o.q)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadSurd(self.p * o.p + 3 * self.q * o.q, self.p * o.q + self.q * o.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero element of Q(sqrt3)")
        return self * QuadSurd(o.p / n, -o.q / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return QuadSurd(-self.p, -self.q)

    def __pow__(self, k: int) -> "QuadSurd":
        if k < 0:
            return QuadSurd.of(1) / self ** (-k)
        result = QuadSurd.of(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.p, -self.q)

    def norm(self) -> Fraction:
        return self.p * self.p - 3 * self.q * self.q

    def is_rational(self) -> bool:
        return self.q == 0

    def to_rational(self) -> Fraction:
        if self.q != 0:
            raise ConsistencyError(f"sqrt(3)-part did not cancel: {self}")
        return self.p

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * math.sqrt(3.0)

    def __repr__(self) -> str:
        return f"QuadSurd({self.p}, {self.q})"


SQRT3 = QuadSurd.of(0, 1)
PLUS = QuadSurd.of(2, 1)    # 2 + sqrt3
MINUS = QuadSurd.of(2, -1)  # 2 - sqrt3, its field inverse


@lru_cache(maxsize=4096)
def _unit_power(k: int) -> tuple[int, int]:
    # integer coordinates (x, y) of (2+sqrt3)^k = x + y*sqrt3; plain-int
    # squaring keeps the hot path free of rational normalization
    x, y = 1, 0
    bx, by = 2, 1
    while k:
        if k & 1:
            x, y = x * bx + 3 * y * by, x * by + y * bx
        bx, by = bx * bx + 3 * by * by, 2 * bx * by
        k >>= 1
    return x, y


def power_sum(k: int) -> QuadSurd:
    """(2+sqrt3)^k + (2-sqrt3)^k, always rational."""
    return QuadSurd.of(2 * _unit_power(k)[0])


def power_diff(k: int) -> QuadSurd:
    """(2+sqrt3)^k - (2-sqrt3)^k, always a pure sqrt(3) multiple."""
    return QuadSurd.of(0, 2 * _unit_power(k)[1])


# ---------------------------------------------------------------------------
# Exact determinants


def _lcm(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def _bareiss_int(m: list[list[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def bareiss_det(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free elimination.

    Accepts integer or rational entries; rational rows are scaled to integers
    first and the scaling divided back out. The empty matrix has determinant 1.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    rows = [[Fraction(x) for x in row] for row in matrix]
    if any(len(r) != n for r in rows):
        raise InvalidParameterError("determinant needs a square matrix")
    scale = 1
    int_rows: list[list[int]] = []
    for row in rows:
        mult = _lcm(x.denominator for x in row)
        scale *= mult
        int_rows.append([int(x * mult) for x in row])
    return Fraction(_bareiss_int(int_rows), scale)


class RationalMatrix:
    """Dense square matrix of exact rationals."""

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        self.order = len(self.rows)
        if any(len(r) != self.order for r in self.rows):
            raise InvalidParameterError("rows must form a square matrix")

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def det(self) -> Fraction:
        return bareiss_det(self.rows)

    def leading_minor(self, k: int) -> Fraction:
        return bareiss_det([row[:k] for row in self.rows[:k]])

    def principal_submatrix(self, keep: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([[self.rows[i][j] for j in keep] for i in keep])

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.order)), Fraction(0))


# ---------------------------------------------------------------------------
# Rationalized fold blocks

_EVEN_DIAG = (Fraction(1, 5), Fraction(2, 7))
_ODD_DIAG = (Fraction(3, 5), Fraction(4, 7))
_END_PAIR = Fraction(1, 35)
_MID_PAIR = Fraction(1, 49)


def _block(order: int, end_diag: Fraction, mid_diag: Fraction) -> RationalMatrix:
    rows = [[Fraction(0)] * order for _ in range(order)]
    for k in range(order):
        rows[k][k] = mid_diag if 0 < k < order - 1 else end_diag
    for k in range(order - 1):
        rows[k][k + 1] = _END_PAIR if (k == 0 or k == order - 2) else _MID_PAIR
        rows[k + 1][k] = Fraction(1)
    return RationalMatrix(rows)


def even_block_exact(n: int) -> RationalMatrix:
    """Rationalized image of the full (n+1)-order singular fold block."""
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    return _block(n + 1, *_EVEN_DIAG)


def odd_block_exact(n: int) -> RationalMatrix:
    """Rationalized image of the full (n+1)-order positive definite fold block."""
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    return _block(n + 1, *_ODD_DIAG)


def _leading_pattern(i: int, end_diag: Fraction, mid_diag: Fraction) -> RationalMatrix:
    # Leading i x i corner as embedded in an arbitrarily long chain: only the
    # first coupling is an end pair, the far corner is never reached.
    rows = [[Fraction(0)] * i for _ in range(i)]
    for k in range(i):
        rows[k][k] = end_diag if k == 0 else mid_diag
    for k in range(i - 1):
        rows[k][k + 1] = _END_PAIR if k == 0 else _MID_PAIR
        rows[k + 1][k] = Fraction(1)
    return RationalMatrix(rows)


def even_minors(i_max: int) -> list[tuple[Fraction, Fraction]]:
    """Leading principal minors of the singular block, (determinant, closed form).

    The closed form is the geometric law (1/5)*(1/7)^(i-1).
    """
    if i_max < 1:
        raise InvalidParameterError("i_max must be >= 1")
    out = []
    for i in range(1, i_max + 1):
        det = _leading_pattern(i, *_EVEN_DIAG).det()
        closed = Fraction(1, 5) * Fraction(1, 7) ** (i - 1)
        out.append((det, closed))
    return out


def odd_minor_closed(i: int) -> Fraction:
    """Closed form for the i-th leading minor of the positive definite block.

    Evaluated exactly in Q(sqrt3); the sqrt(3)-part must cancel.
    """
    xp = PLUS / 7
    xm = MINUS / 7
    z1 = QuadSurd.of(Fraction(21, 30), Fraction(7, 30))
    z2 = z1.conjugate()
    return (z1 * xp ** i + z2 * xm ** i).to_rational()


def odd_minors(i_max: int) -> list[tuple[Fraction, Fraction]]:
    """Leading principal minors of the positive definite block, (determinant, closed form)."""
    if i_max < 1:
        raise InvalidParameterError("i_max must be >= 1")
    out = []
    for i in range(1, i_max + 1):
        det = _leading_pattern(i, *_ODD_DIAG).det()
        out.append((det, odd_minor_closed(i)))
    return out


def _even_minor_value(i: int) -> Fraction:
    # determinant route; i = 0 is the empty minor
    if i == 0:
        return Fraction(1)
    return _leading_pattern(i, *_EVEN_DIAG).det()


def _odd_minor_value(i: int) -> Fraction:
    if i == 0:
        return Fraction(1)
    return _leading_pattern(i, *_ODD_DIAG).det()


def _principal_minor_sum(m: RationalMatrix, size: int) -> Fraction:
    total = Fraction(0)
    for keep in combinations(range(m.order), size):
        total += m.principal_submatrix(keep).det()
    return total


_ENUMERATION_LIMIT = 10


@dataclass(frozen=True)
class EvenCoeffs:
    """Tail coefficients of the singular block's characteristic polynomial.

    minor_sum_full is the sum of all n-order principal minors (the product of
    the n nonzero eigenvalues); minor_sum_drop1 the sum of (n-1)-order ones.
    """

    minor_sum_full: Fraction
    minor_sum_drop1: Fraction


def even_coeffs(n: int) -> EvenCoeffs:
    """Both tail coefficients, closed form cross-checked against an oracle.

    Oracle: explicit principal-minor enumeration for n <= 10, otherwise the
    minor-convolution identities that persymmetry of the block provides,
    fed with determinant-route minor values.
    """
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    closed_full = Fraction(7 * n + 3, 25) * Fraction(1, 7) ** (n - 1)
    closed_drop1 = Fraction(49 * n**3 + 63 * n**2 + 38 * n, 150) * Fraction(1, 7) ** (n - 1)

    if n <= _ENUMERATION_LIMIT:
        block = even_block_exact(n)
        oracle_full = _principal_minor_sum(block, n)
        oracle_drop1 = _principal_minor_sum(block, n - 1)
    else:
        m = [_even_minor_value(i) for i in range(n + 1)]
        oracle_full = sum((m[i - 1] * m[n + 1 - i] for i in range(1, n + 2)), Fraction(0))
        oracle_drop1 = Fraction(0)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 2):
                gap = j - i - 1
                oracle_drop1 += m[i - 1] * m[n + 1 - j] * (gap + 1) * Fraction(1, 7) ** gap

    if oracle_full != closed_full:
        raise ConsistencyError(
            f"n-order minor sum mismatch at n={n}: oracle {oracle_full}, closed {closed_full}")
    if oracle_drop1 != closed_drop1:
        raise ConsistencyError(
            f"(n-1)-order minor sum mismatch at n={n}: oracle {oracle_drop1}, closed {closed_drop1}")
    return EvenCoeffs(closed_full, closed_drop1)


@dataclass(frozen=True)
class OddDetRoutes:
    """Determinant of the positive definite block by three routes."""

    closed_form: Fraction      # hyperbolic-power closed form
    minor_expansion: Fraction  # last-row expansion over true leading minors
    determinant: Fraction      # direct exact determinant

    def agree(self) -> bool:
        return self.closed_form == self.minor_expansion == self.determinant


def odd_det(n: int) -> OddDetRoutes:
    """All three determinant routes; disagreement is reported, not raised."""
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    xp = PLUS / 7
    xm = MINUS / 7
    closed = (QuadSurd.of(0, Fraction(49, 75)) * (xp ** (n + 1) - xm ** (n + 1))).to_rational()
    expansion = Fraction(3, 5) * _odd_minor_value(n) - Fraction(1, 35) * _odd_minor_value(n - 1)
    determinant = odd_block_exact(n).det()
    return OddDetRoutes(closed, expansion, determinant)


@dataclass(frozen=True)
class OddCoeffRoutes:
    """Sum of n-order principal minors of the positive definite block.

    The two closed variants differ only in the sign of their sqrt(3)-paired
    third term; `matching` names which one equals the convolution oracle.
    """

    oracle: Fraction
    minus_variant: Fraction
    plus_variant: Fraction
    matching: str

    def agree(self) -> bool:
        return self.matching == "minus" and self.minus_variant == self.oracle


def odd_coeff(n: int) -> OddCoeffRoutes:
    """Minor-sum coefficient by convolution oracle and both closed variants."""
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    w = [_odd_minor_value(i) for i in range(n + 1)]
    oracle = sum((w[i] * w[n - i] for i in range(n + 1)), Fraction(0))

    xp = PLUS / 7
    xm = MINUS / 7
    base = (Fraction(343 * n + 441, 150) * (xp ** (n + 1) + xm ** (n + 1))
            - Fraction(21, 50) * (xp ** n + xm ** n))
    third = QuadSurd.of(0, Fraction(14, 225)) * (xp ** n - xm ** n)
    plus = (base + third).to_rational()
    minus = (base - third).to_rational()

    if minus == oracle:
        matching = "minus"
    elif plus == oracle:
        matching = "plus"
    else:
        matching = "neither"
    return OddCoeffRoutes(oracle, minus, plus, matching)


def fraction_to_decimal(x: Fraction, places: int = 20) -> str:
    """Exact decimal expansion of a rational, truncated to `places` digits."""
    sign = "-" if x < 0 else ""
    num = abs(x.numerator)
    den = x.denominator
    whole, rem = divmod(num, den)
    if places == 0:
        return f"{sign}{whole}"
    digits = []
    for _ in range(places):
        rem *= 10
        d, rem = divmod(rem, den)
        digits.append(str(d))
    return f"{sign}{whole}." + "".join(digits)
