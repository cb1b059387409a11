"""Exact closed-form evaluators for the prism-chain invariants.

Everything here is evaluated in Q(sqrt3): the hyperbolic powers (2+sqrt3)^k
and (2-sqrt3)^k carry the whole n-dependence of the degree-Kirchhoff index
and the spanning-tree count, and their conjugate symmetry makes every final
value rational (the sqrt(3)-part cancels identically, which is checked).
Floating point never enters: (2+sqrt3)^(n+1) overflows doubles near n = 780
and loses integerness long before that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, InvalidParameterError
from .exact import SQRT3, odd_coeff, odd_det, power_diff, power_sum

PATTERN_REGIME_MIN = 2  # below this the 5/7 degree pattern does not hold


def pattern_regime(n: int) -> bool:
    """Whether the chain length lies in the regime the fold blocks describe."""
    return n >= PATTERN_REGIME_MIN


def _require_positive(n: int) -> None:
    if n < 1:
        raise InvalidParameterError("n must be >= 1")


def sum_inv_even(n: int) -> Fraction:
    """Reciprocal sum over the nonzero eigenvalues of the singular fold block."""
    _require_positive(n)
    return Fraction(49 * n**3 + 63 * n**2 + 38 * n, 6 * (7 * n + 3))


def sum_inv_odd(n: int) -> Fraction:
    """Reciprocal eigenvalue sum of the positive definite fold block.

    Evaluated exactly from hyperbolic powers, and cross-checked against the
    minor-sum coefficient divided by the block determinant.
    """
    _require_positive(n)
    num = SQRT3 * (7 * n - 9) * power_sum(n + 1) - 4 * power_diff(n)
    den = 6 * power_diff(n + 1)
    value = (num / den).to_rational() + Fraction(9, 2)

    coeff = odd_coeff(n)
    det = odd_det(n)
    alt = coeff.minus_variant / det.closed_form
    if alt != value:
        raise ConsistencyError(
            f"reciprocal-sum routes disagree at n={n}: {value} vs {alt}")
    return value


def degree_kirchhoff_assembled(n: int) -> Fraction:
    """Degree-Kirchhoff index assembled from the four spectral contributions:
    the two diagonal difference-block families and the two fold blocks."""
    _require_positive(n)
    inner = (Fraction(10, 3)
             + (2 * n - 2) * Fraction(7, 8)
             + Fraction(1, 2) * sum_inv_even(n)
             + Fraction(1, 2) * sum_inv_odd(n))
    return 4 * (7 * n + 3) * inner


def degree_kirchhoff_closed(n: int) -> Fraction:
    """Single closed form for the degree-Kirchhoff index of the n-square prism."""
    _require_positive(n)
    num = (SQRT3 * (7 * n - 9) * (7 * n + 3) * power_sum(n + 1)
           - 4 * (7 * n + 3) * power_diff(n))
    den = 3 * power_diff(n + 1)
    surd_part = (num / den).to_rational()
    poly_part = Fraction(49, 3) * n**3 + 70 * n**2 + 141 * n + 46
    return surd_part + poly_part


def spanning_trees_closed(n: int) -> int:
    """Closed-form spanning-tree count of the n-square prism; always integral."""
    _require_positive(n)
    value = (SQRT3 * 27 * Fraction(2) ** (8 * n - 3) * power_diff(n + 1)).to_rational()
    if value.denominator != 1 or value <= 0:
        raise ConsistencyError(f"tree count came out non-integral: {value}")
    return value.numerator


def gutman_closed(n: int) -> int:
    """Closed-form degree-weighted distance sum of the n-square prism."""
    _require_positive(n)
    value = Fraction(392 * n**3, 3) + 364 * n**2 + Fraction(1102 * n, 3) + 38
    if value.denominator != 1:
        raise ConsistencyError(f"closed form came out non-integral: {value}")
    return value.numerator


LEADING_RATIO = Fraction(49, 3) / Fraction(392, 3)  # exactly 1/8


@dataclass(frozen=True)
class RatioPoint:
    n: int
    ratio: Fraction

    @property
    def delta(self) -> Fraction:
        return abs(self.ratio - Fraction(1, 8))


def ratio_series(n_max: int) -> list[RatioPoint]:
    """Exact degree-Kirchhoff to Gutman ratios for n = 2..n_max."""
    if n_max < 2:
        raise InvalidParameterError("n_max must be >= 2")
    return [RatioPoint(n, degree_kirchhoff_closed(n) / gutman_closed(n))
            for n in range(2, n_max + 1)]
