"""Closed-form evaluators against numeric eigensolves and brute force."""

import math
from fractions import Fraction

import pytest

from polyprism.errors import InvalidParameterError
from polyprism.formulas import (
    LEADING_RATIO,
    degree_kirchhoff_assembled,
    degree_kirchhoff_closed,
    gutman_closed,
    pattern_regime,
    ratio_series,
    spanning_trees_closed,
    sum_inv_even,
    sum_inv_odd,
)
from polyprism.graphs import strong_prism_polyomino
from polyprism.invariants import degree_kirchhoff_index, gutman, spanning_trees
from polyprism.spectral import fold_blocks, sym_eigenvalues

F = Fraction


def test_pattern_regime_flag():
    assert not pattern_regime(1)
    assert pattern_regime(2) and pattern_regime(100)


def test_sum_inv_even_values():
    assert sum_inv_even(1) == F(5, 2)
    assert sum_inv_even(2) == F(120, 17)
    assert sum_inv_even(3) == F(167, 12)


@pytest.mark.parametrize("n", range(1, 11))
def test_sum_inv_even_matches_eigensolve(n):
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        even, _ = fold_blocks(n)
    spec = sym_eigenvalues(even)
    if n == 1:
        # boundary: the 2x2 pattern block is nonsingular, sum over both
        numeric = math.fsum(1.0 / v for v in spec.eigenvalues)
        assert numeric != pytest.approx(float(sum_inv_even(1)), rel=1e-6)
        return
    numeric = spec.recip_sum_nonzero(1e-8)
    assert numeric == pytest.approx(float(sum_inv_even(n)), rel=1e-10)


def test_sum_inv_odd_values():
    assert sum_inv_odd(1) == F(15, 4)
    assert sum_inv_odd(2) == F(173, 30)
    assert sum_inv_odd(3) == F(109, 14)
    assert sum_inv_odd(4) == F(4099, 418)
    # n=2 assembles from the coefficient and determinant: (173/175)/(6/35)
    assert F(173, 175) / F(6, 35) == F(173, 30)


@pytest.mark.parametrize("n", range(2, 11))
def test_sum_inv_odd_matches_eigensolve(n):
    _, odd = fold_blocks(n)
    numeric = math.fsum(1.0 / v for v in sym_eigenvalues(odd).eigenvalues)
    assert numeric == pytest.approx(float(sum_inv_odd(n)), rel=1e-10)


def test_sum_inv_odd_sqrt3_cancels_large_n():
    # to_rational inside would raise if the irrational part survived
    for n in (10, 50, 117):
        assert sum_inv_odd(n) > 0


def test_degree_kirchhoff_assembled_values():
    assert degree_kirchhoff_assembled(1) == F(775, 3)
    assert degree_kirchhoff_assembled(2) == F(11726, 15)
    # explicit assembly at n=2: 68*(10/3 + 7/4 + 60/17 + 173/60)
    total = 68 * (F(10, 3) + F(7, 4) + F(60, 17) + F(173, 60))
    assert total == F(11726, 15)


@pytest.mark.parametrize("n", range(1, 13))
def test_degree_kirchhoff_closed_equals_assembled(n):
    assert degree_kirchhoff_closed(n) == degree_kirchhoff_assembled(n)


def test_degree_kirchhoff_closed_values():
    assert degree_kirchhoff_closed(2) == F(11726, 15)
    assert degree_kirchhoff_closed(3) == F(11884, 7)
    assert degree_kirchhoff_closed(4) == F(1946408, 627)


@pytest.mark.parametrize("n", [2, 3])
def test_degree_kirchhoff_closed_matches_numeric(n):
    numeric = degree_kirchhoff_index(strong_prism_polyomino(n))
    ref = float(degree_kirchhoff_closed(n))
    assert abs(numeric.value - ref) / ref <= 1e-9
    assert abs(numeric.alternate - ref) / ref <= 1e-9


def test_spanning_trees_closed_values():
    assert spanning_trees_closed(1) == 20736
    assert spanning_trees_closed(2) == 19906560
    assert spanning_trees_closed(3) == 19025362944
    assert spanning_trees_closed(4) == 18177375338496
    assert spanning_trees_closed(2) == 27 * 2 ** 13 * 90


@pytest.mark.parametrize("n", range(1, 7))
def test_spanning_trees_closed_matches_count(n):
    assert spanning_trees_closed(n) == spanning_trees(strong_prism_polyomino(n)).exact


def test_spanning_trees_closed_beyond_float_range():
    # (2+sqrt3)^(n+1) overflows doubles near n=780; exact path must not care
    tau = spanning_trees_closed(800)
    assert tau > 0
    digits = math.log10(tau)
    assert 2380 < digits < 2390


def test_gutman_closed_values():
    assert gutman_closed(1) == 900
    assert gutman_closed(2) == 3274
    assert gutman_closed(3) == 7944
    assert gutman_closed(4) == 15694


@pytest.mark.parametrize("n", range(1, 21))
def test_gutman_closed_matches_brute_force(n):
    assert gutman_closed(n) == gutman(strong_prism_polyomino(n))


def test_leading_ratio_exact():
    assert LEADING_RATIO == F(1, 8)


def test_ratio_series_values_and_trend():
    points = ratio_series(100)
    assert points[0].n == 2
    assert points[0].ratio == F(11726, 15) / 3274
    deltas = [p.delta for p in points]
    assert all(a > b for a, b in zip(deltas, deltas[1:]))  # strictly approaching 1/8
    assert all(p.delta < F(1, p.n) for p in points)


def test_ratio_delta_at_1000():
    delta = abs(F(degree_kirchhoff_closed(1000)) / gutman_closed(1000) - F(1, 8))
    assert F(403, 1_000_000) < delta < F(404, 1_000_000)
    assert delta < F(1, 1000)


def test_invalid_arguments():
    for fn in (sum_inv_even, sum_inv_odd, degree_kirchhoff_closed,
               spanning_trees_closed, gutman_closed):
        with pytest.raises(InvalidParameterError):
            fn(0)
    with pytest.raises(InvalidParameterError):
        ratio_series(1)
