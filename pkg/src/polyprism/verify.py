"""Per-chain-length verification checks: closed forms against independent routes.

Each check produces one row per chain length n. Rows for n = 1 are always
informational: the coupling pattern behind the closed forms assumes the
5/7 degree mix that only appears from n = 2 on, so boundary rows report
agreement or disagreement without affecting the overall outcome.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exact, formulas, invariants, spectral
from .errors import ConsistencyError, InvalidParameterError
from .graphs import strong_prism_polyomino, twin_pairing

SPECTRAL_REL_TOL = 1e-9
DECOMPOSITION_ABS_TOL = 1e-8
TREE_PROBE_REL_TOL = 1e-6


@dataclass(frozen=True)
class VerificationRow:
    n: int
    check: str
    passed: bool
    pattern_regime: bool
    routes: tuple[tuple[str, str], ...] = ()
    delta: float | None = None
    exact_equal: bool | None = None
    note: str = ""

    @property
    def status(self) -> str:
        if not self.pattern_regime:
            return "info:agree" if self.passed else "info:differ"
        return "PASS" if self.passed else "FAIL"


def _row(n, check, passed, routes=(), delta=None, exact_equal=None, note=""):
    return VerificationRow(
        n=n, check=check, passed=passed, pattern_regime=formulas.pattern_regime(n),
        routes=tuple(routes), delta=delta, exact_equal=exact_equal, note=note)


def check_decomposition(n: int) -> VerificationRow:
    """Spectrum of the prism's normalized Laplacian = union of the two fold spectra."""
    g = strong_prism_polyomino(n)
    whole = spectral.sym_eigenvalues(spectral.normalized_laplacian(g)).eigenvalues
    sum_block, diff_block = spectral.split_blocks(g, twin_pairing(g))
    merged = sorted(spectral.sym_eigenvalues(sum_block).eigenvalues
                    + spectral.sym_eigenvalues(diff_block).eigenvalues)
    delta = float(np.max(np.abs(np.array(whole) - np.array(merged))))
    return _row(n, "decomposition", delta <= DECOMPOSITION_ABS_TOL,
                routes=[("elementwise max diff", repr(delta))], delta=delta)


def check_difference_spectrum(n: int) -> VerificationRow:
    """The difference block is diagonal with eigenvalues 6/5 (x4) and 8/7 (x 2n-2)."""
    g = strong_prism_polyomino(n)
    _, diff_block = spectral.split_blocks(g, twin_pairing(g))
    groups = spectral.sym_eigenvalues(diff_block).multiplicity_groups()
    expected = [(8.0 / 7.0, 2 * n - 2), (6.0 / 5.0, 4)] if n >= 2 else [(6.0 / 5.0, 4)]
    ok = len(groups) == len(expected) and all(
        abs(gv - ev) <= 1e-9 and gc == ec
        for (gv, gc), (ev, ec) in zip(groups, expected))
    shown = ", ".join(f"{gv!r} x{gc}" for gv, gc in groups)
    return _row(n, "ls-spectrum", ok, routes=[("grouped spectrum", shown)])


def check_minors(n: int) -> VerificationRow:
    """Leading-minor determinants equal their closed forms exactly at index n."""
    det_e, closed_e = exact.even_minors(n)[-1]
    det_o, closed_o = exact.odd_minors(n)[-1]
    ok = det_e == closed_e and det_o == closed_o
    return _row(n, "minors", ok, exact_equal=ok,
                routes=[("even det/closed", f"{det_e} / {closed_e}"),
                        ("odd det/closed", f"{det_o} / {closed_o}")])


def check_coeffs(n: int) -> VerificationRow:
    """Characteristic-coefficient closed forms equal the principal-minor oracles."""
    try:
        ec = exact.even_coeffs(n)
    except ConsistencyError as err:
        return _row(n, "coeffs", False, note=str(err))
    oc = exact.odd_coeff(n)
    ok = oc.agree()
    note = ("minus variant matches oracle; plus variant differs as expected (erratum)"
            if ok and oc.plus_variant != oc.oracle else "")
    return _row(n, "coeffs", ok, exact_equal=ok, note=note,
                routes=[("even tail", f"{ec.minor_sum_full}, {ec.minor_sum_drop1}"),
                        ("odd oracle/minus/plus",
                         f"{oc.oracle} / {oc.minus_variant} / {oc.plus_variant}")])


def check_degree_kirchhoff(n: int) -> VerificationRow:
    """Closed form = assembled form exactly; both match the two numeric routes."""
    closed = formulas.degree_kirchhoff_closed(n)
    assembled = formulas.degree_kirchhoff_assembled(n)
    g = strong_prism_polyomino(n)
    numeric = invariants.degree_kirchhoff_index(g)
    ref = float(closed)
    delta_a = abs(numeric.value - ref) / ref
    delta_b = abs(numeric.alternate - ref) / ref
    ok = (closed == assembled and delta_a <= SPECTRAL_REL_TOL and delta_b <= SPECTRAL_REL_TOL)
    return _row(n, "kfstar", ok, delta=max(delta_a, delta_b),
                exact_equal=closed == assembled,
                routes=[("closed", str(closed)), ("assembled", str(assembled)),
                        ("resistance sum", repr(numeric.value)),
                        ("spectral", repr(numeric.alternate))])


def check_spanning_trees(n: int) -> VerificationRow:
    """Closed-form tree count equals the exact determinant count."""
    closed = formulas.spanning_trees_closed(n)
    counted = invariants.spanning_trees(strong_prism_polyomino(n)).exact
    ok = closed == counted
    return _row(n, "tau", ok, exact_equal=ok,
                routes=[("closed", str(closed)), ("matrix-tree", str(counted))])


def check_gutman(n: int) -> VerificationRow:
    """Closed-form degree-weighted distance sum equals the BFS double loop."""
    closed = formulas.gutman_closed(n)
    brute = invariants.gutman(strong_prism_polyomino(n))
    ok = closed == brute
    return _row(n, "gutman", ok, exact_equal=ok,
                routes=[("closed", str(closed)), ("brute force", str(brute))])


def check_ratio(n: int) -> VerificationRow:
    """|degree-Kirchhoff / Gutman - 1/8| < 1/n, exactly in rationals."""
    ratio = Fraction(formulas.degree_kirchhoff_closed(n)) / formulas.gutman_closed(n)
    delta = abs(ratio - Fraction(1, 8))
    ok = delta < Fraction(1, n)
    return _row(n, "ratio", ok, delta=float(delta),
                routes=[("ratio", exact.fraction_to_decimal(ratio, 20)),
                        ("|ratio - 1/8|", exact.fraction_to_decimal(delta, 20))])


def check_tree_product_probe(n: int) -> VerificationRow:
    """Degree product times nonzero normalized eigenvalue product over twice the
    edge count reproduces the exact tree count (float diagnostic)."""
    count = invariants.spanning_trees(strong_prism_polyomino(n))
    ok = count.rel_delta <= TREE_PROBE_REL_TOL
    return _row(n, "lemma22", ok, delta=count.rel_delta,
                routes=[("exact", str(count.exact)),
                        ("float probe rel delta", repr(count.rel_delta))])


CHECKS = {
    "decomposition": check_decomposition,
    "ls-spectrum": check_difference_spectrum,
    "minors": check_minors,
    "coeffs": check_coeffs,
    "kfstar": check_degree_kirchhoff,
    "tau": check_spanning_trees,
    "gutman": check_gutman,
    "ratio": check_ratio,
    "lemma22": check_tree_product_probe,
}

CHECK_ORDER = tuple(CHECKS)


def run_checks(min_n: int, max_n: int, check_ids: list[str], jobs: int = 1) -> list[VerificationRow]:
    """All requested checks for every n in range, ordered by (n, check)."""
    if not 1 <= min_n <= max_n:
        raise InvalidParameterError("need 1 <= min_n <= max_n")
    unknown = [c for c in check_ids if c not in CHECKS]
    if unknown:
        raise InvalidParameterError(f"unknown checks: {', '.join(unknown)}")
    work = [(n, cid) for n in range(min_n, max_n + 1)
            for cid in CHECK_ORDER if cid in check_ids]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(lambda nc: CHECKS[nc[1]](nc[0]), work))
    else:
        rows = [CHECKS[cid](n) for n, cid in work]
    rows.sort(key=lambda r: (r.n, CHECK_ORDER.index(r.check)))
    return rows


def all_pattern_rows_pass(rows: list[VerificationRow]) -> bool:
    return all(r.passed for r in rows if r.pattern_regime)
