"""Dense symmetric matrices, Laplacians, a cyclic Jacobi eigensolver, and the
two-stage fold of a prism's normalized Laplacian into tridiagonal blocks.

A prism graph laid out as two contiguous twin blocks has a normalized
Laplacian of the form [[B, C], [C, B]] with C symmetric. Conjugating by the
orthogonal half-sum/half-difference matrix block-diagonalizes it into
B+C (the "sum block") and B-C (the "difference block"), so the spectrum of
the whole splits into the spectra of the two halves. For prisms over chains
the sum block folds once more, along the two rails, into a pair of
(n+1)-order tridiagonal matrices.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidParameterError,
    NumericFailureError,
    PatternRegimeWarning,
    RankAnomalyError,
    StructureError,
)
from .graphs import Graph, strong_prism_polyomino, twin_pairing

JACOBI_SWEEP_CAP = 100
JACOBI_THRESHOLD_SCALE = 1e-14  # times the Frobenius norm
GROUPING_TOL = 1e-8
PSD_ZERO_SCALE = 1e-10  # times the max-norm


class SymMatrix:
    """Immutable dense symmetric matrix of doubles.

    The upper triangle is authoritative: the constructor mirrors it down, so
    entry (i, j) equals entry (j, i) bit for bit.
    """

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(entries, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidParameterError("symmetric matrix needs a square array")
        if a.shape[0] < 1:
            raise InvalidParameterError("order must be >= 1")
        upper = np.triu(a)
        a = upper + np.triu(a, 1).T
        a.flags.writeable = False
        self._a = a

    @property
    def order(self) -> int:
        return self._a.shape[0]

    def __getitem__(self, key) -> float:
        i, j = key
        return float(self._a[i, j])

    def to_array(self) -> np.ndarray:
        """Read-only view of the underlying array."""
        return self._a

    def max_norm(self) -> float:
        return float(np.max(np.abs(self._a)))

    def to_csv(self) -> str:
        return "\n".join(",".join(repr(float(x)) for x in row) for row in self._a) + "\n"

    def __repr__(self) -> str:
        return f"SymMatrix(order={self.order})"


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in ascending order."""

    eigenvalues: tuple[float, ...]

    def multiplicity_groups(self, tol: float = GROUPING_TOL) -> list[tuple[float, int]]:
        """Group eigenvalues whose consecutive gaps stay within tol.

        Returns (group mean, count) pairs, ascending.
        """
        groups: list[tuple[float, int]] = []
        run: list[float] = []
        for ev in self.eigenvalues:
            if run and ev - run[-1] > tol:
                groups.append((math.fsum(run) / len(run), len(run)))
                run = []
            run.append(ev)
        if run:
            groups.append((math.fsum(run) / len(run), len(run)))
        return groups

    def recip_sum_nonzero(self, zero_tol: float) -> float:
        """Sum of reciprocals of eigenvalues above zero_tol."""
        return math.fsum(1.0 / ev for ev in self.eigenvalues if ev > zero_tol)


def laplacian(g: Graph) -> SymMatrix:
    """Combinatorial Laplacian: degree diagonal minus adjacency."""
    n = g.n_vertices
    a = np.zeros((n, n))
    for i, j in g.edges:
        a[i, j] = a[j, i] = -1.0
    for v in range(n):
        a[v, v] = g.degree(v)
    return SymMatrix(a)


def normalized_laplacian(g: Graph) -> SymMatrix:
    """Degree-normalized Laplacian: unit diagonal, -1/sqrt(d_i d_j) on edges.

    Isolated vertices get an all-zero row (their inverse square-root degree
    is taken as zero).
    """
    n = g.n_vertices
    d = g.degrees()
    a = np.zeros((n, n))
    for i, j in g.edges:
        a[i, j] = a[j, i] = -1.0 / math.sqrt(d[i] * d[j])
    for v in range(n):
        a[v, v] = 1.0 if d[v] > 0 else 0.0
    return SymMatrix(a)


def _jacobi_eigh(m: SymMatrix, need_vectors: bool) -> tuple[np.ndarray, np.ndarray | None]:
    """Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls
    under JACOBI_THRESHOLD_SCALE times the Frobenius norm of the input."""
    a = np.array(m.to_array(), dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n) if need_vectors else None
    if n == 1:
        return a.diagonal().copy(), v

    fro = float(np.linalg.norm(a))
    threshold = JACOBI_THRESHOLD_SCALE * fro
    if fro == 0.0:
        return np.zeros(n), v
    # entries this small cannot lift the off-diagonal norm above the threshold
    skip_tol = threshold / n

    def off_norm() -> float:
        off = a.copy()
        np.fill_diagonal(off, 0.0)
        return float(np.linalg.norm(off))

    converged = False
    for _ in range(JACOBI_SWEEP_CAP):
        if off_norm() <= threshold:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip_tol:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
    if not converged and off_norm() > threshold:
        raise NumericFailureError(
            f"eigensolver did not converge within {JACOBI_SWEEP_CAP} sweeps "
            f"(off-diagonal norm {off_norm():.3e}, threshold {threshold:.3e})",
            residual=off_norm(),
        )

    values = a.diagonal().copy()
    order = np.argsort(values, kind="stable")
    values = values[order]
    if v is not None:
        v = v[:, order]
    return values, v


def sym_eigenvalues(m: SymMatrix) -> Spectrum:
    """All eigenvalues of a symmetric matrix, ascending, deterministic."""
    if not np.all(np.isfinite(m.to_array())):
        raise InvalidParameterError("matrix entries must be finite")
    values, _ = _jacobi_eigh(m, need_vectors=False)
    return Spectrum(tuple(float(x) for x in values))


def split_blocks(g: Graph, pairing: tuple[int, ...]) -> tuple[SymMatrix, SymMatrix]:
    """Fold the normalized Laplacian along a twin involution.

    The pairing must swap the first and second halves of the vertex order
    elementwise (i <-> i+half) and be an automorphism; the Laplacian's
    diagonal blocks must then match exactly, as must the off-diagonal block
    and its transpose. Returns (sum block, difference block); their spectra
    together form the spectrum of the whole.
    """
    n = g.n_vertices
    if len(pairing) != n:
        raise StructureError("pairing length does not match vertex count")
    if n % 2:
        raise StructureError("vertex count must be even")
    half = n // 2
    for i in range(n):
        j = pairing[i]
        if j == i:
            raise StructureError(f"pairing fixes vertex {i}")
        if pairing[j] != i:
            raise StructureError(f"pairing is not an involution at vertex {i}")
    for i in range(half):
        if pairing[i] != i + half:
            raise StructureError(
                f"pairing must map vertex {i} to {i + half}, got {pairing[i]}")
    for (a, b) in g.edges:
        if not g.has_edge(pairing[a], pairing[b]):
            raise StructureError(f"pairing does not preserve edge ({a}, {b})")

    lap = normalized_laplacian(g).to_array()
    b11 = lap[:half, :half]
    b12 = lap[:half, half:]
    b21 = lap[half:, :half]
    b22 = lap[half:, half:]
    diff_diag = np.abs(b11 - b22)
    if np.max(diff_diag) > 0.0:
        i, j = np.unravel_index(int(np.argmax(diff_diag)), diff_diag.shape)
        raise StructureError(f"diagonal blocks differ at entry ({i}, {j})")
    diff_off = np.abs(b12 - b21)
    if np.max(diff_off) > 0.0:
        i, j = np.unravel_index(int(np.argmax(diff_off)), diff_off.shape)
        raise StructureError(f"off-diagonal block is not symmetric at entry ({i}, {j})")
    return SymMatrix(b11 + b12), SymMatrix(b11 - b12)


def fold_blocks(n: int) -> tuple[SymMatrix, SymMatrix]:
    """The two (n+1)-order tridiagonal blocks of the doubly folded prism chain.

    Both share the coupling pattern -1/sqrt(35) at the two ends and -1/7
    inside. The first ("even") block has diagonal (1/5, 2/7, ..., 2/7, 1/5)
    and is singular; the second ("odd") block has diagonal
    (3/5, 4/7, ..., 4/7, 3/5) and is positive definite.

    For n == 1 the pattern is emitted literally even though every vertex of
    the 1-square prism has degree 5, so these blocks do not describe that
    graph; a PatternRegimeWarning is issued.
    """
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    order = n + 1
    end = -1.0 / math.sqrt(35.0)
    mid = -1.0 / 7.0

    def tridiag(d_end: float, d_mid: float) -> np.ndarray:
        a = np.zeros((order, order))
        for k in range(order):
            a[k, k] = d_mid if 0 < k < order - 1 else d_end
        for k in range(order - 1):
            c = end if (k == 0 or k == order - 2) else mid
            a[k, k + 1] = a[k + 1, k] = c
        return a

    even = SymMatrix(tridiag(1.0 / 5.0, 2.0 / 7.0))
    odd = SymMatrix(tridiag(3.0 / 5.0, 4.0 / 7.0))

    if n == 1:
        warnings.warn(
            "fold blocks for a 1-square chain use the generic coupling pattern, "
            "which does not describe the 5-regular prism",
            PatternRegimeWarning,
            stacklevel=2,
        )
        return even, odd

    g = strong_prism_polyomino(n)
    sum_block, _ = split_blocks(g, twin_pairing(g))
    c = (even.to_array() + odd.to_array()) / 2.0
    d = (even.to_array() - odd.to_array()) / 2.0
    rebuilt = 2.0 * np.block([[c, d], [d, c]])
    err = float(np.max(np.abs(rebuilt - sum_block.to_array())))
    if err > 1e-12:
        raise StructureError(
            f"fold blocks do not reassemble the prism's sum block (max error {err:.3e})")
    return even, odd


def pseudoinverse_psd(m: SymMatrix) -> SymMatrix:
    """Moore-Penrose pseudoinverse of a positive semidefinite matrix.

    Eigenvalues below PSD_ZERO_SCALE times the max-norm count as zero; more
    than one such eigenvalue is treated as a rank anomaly, since the intended
    inputs are Laplacians of connected graphs.
    """
    values, vectors = _jacobi_eigh(m, need_vectors=True)
    cutoff = PSD_ZERO_SCALE * max(m.max_norm(), 1e-300)
    if values[0] < -1e-9:
        raise InvalidParameterError(f"matrix is not positive semidefinite ({values[0]:.3e})")
    zero_mask = values <= cutoff
    near_zero = int(np.sum(zero_mask))
    if near_zero > 1:
        raise RankAnomalyError(f"{near_zero} near-zero eigenvalues, expected at most one")
    inv = np.zeros_like(values)
    inv[~zero_mask] = 1.0 / values[~zero_mask]
    pinv = (vectors * inv) @ vectors.T
    pinv = (pinv + pinv.T) / 2.0
    return SymMatrix(pinv)
