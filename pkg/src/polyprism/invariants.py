"""Distance- and resistance-based graph invariants, each by two routes.

The sum route over explicit distance/resistance matrices is always computed;
a spectral route (reciprocal eigenvalue sums, eigenvalue products) provides
an independent cross-check. Spanning trees are authoritative through the
exact integer determinant of a Laplacian minor; the float spectral product
is a diagnostic only.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DisconnectedGraphError
from .exact import bareiss_det
from .graphs import Graph
from .spectral import (
    Spectrum,
    laplacian,
    normalized_laplacian,
    pseudoinverse_psd,
    sym_eigenvalues,
)

SPECTRAL_ZERO_TOL = 1e-8
FLOAT_TAU_WARN = 1e-6


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances."""

    order: int
    d: tuple[tuple[int, ...], ...]

    def __getitem__(self, key) -> int:
        i, j = key
        return self.d[i][j]


@dataclass(frozen=True)
class ResistanceMatrix:
    """All-pairs effective resistances."""

    order: int
    r: tuple[tuple[float, ...], ...]

    def __getitem__(self, key) -> float:
        i, j = key
        return self.r[i][j]


def distance_matrix(g: Graph) -> DistanceMatrix:
    """BFS hop distances between all vertex pairs."""
    n = g.n_vertices
    rows = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y in g.adjacency[x]:
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        if any(x < 0 for x in dist):
            bad = dist.index(-1)
            raise DisconnectedGraphError(f"vertex {bad} unreachable from vertex {s}")
        rows.append(tuple(dist))
    return DistanceMatrix(n, tuple(rows))


def wiener(g: Graph) -> int:
    """Sum of hop distances over unordered pairs."""
    dm = distance_matrix(g)
    return sum(dm[i, j] for i in range(g.n_vertices) for j in range(i + 1, g.n_vertices))


def gutman(g: Graph) -> int:
    """Degree-weighted distance sum over unordered pairs."""
    dm = distance_matrix(g)
    deg = g.degrees()
    n = g.n_vertices
    return sum(deg[i] * deg[j] * dm[i, j] for i in range(n) for j in range(i + 1, n))


def resistance_matrix(g: Graph) -> ResistanceMatrix:
    """Effective resistances from the Laplacian pseudoinverse."""
    if not g.is_connected():
        raise DisconnectedGraphError("resistance distances need a connected graph")
    pinv = pseudoinverse_psd(laplacian(g)).to_array()
    diag = np.diag(pinv)
    r = diag[:, None] + diag[None, :] - 2.0 * pinv
    np.fill_diagonal(r, 0.0)
    r = np.maximum(r, 0.0)
    return ResistanceMatrix(g.n_vertices, tuple(tuple(float(x) for x in row) for row in r))


@dataclass(frozen=True)
class TwoRouteValue:
    """A quantity computed by two independent routes."""

    value: float          # authoritative route
    alternate: float
    label: str

    @property
    def rel_delta(self) -> float:
        scale = max(abs(self.value), abs(self.alternate), 1e-300)
        return abs(self.value - self.alternate) / scale


def kirchhoff_index(g: Graph) -> TwoRouteValue:
    """Resistance sum, cross-checked against n times the reciprocal sum of
    the nonzero combinatorial Laplacian eigenvalues."""
    rm = resistance_matrix(g)
    n = g.n_vertices
    route_a = math.fsum(rm[i, j] for i in range(n) for j in range(i + 1, n))
    spec = sym_eigenvalues(laplacian(g))
    route_b = n * spec.recip_sum_nonzero(SPECTRAL_ZERO_TOL)
    return TwoRouteValue(route_a, route_b, "kirchhoff")


def degree_kirchhoff_index(g: Graph) -> TwoRouteValue:
    """Degree-weighted resistance sum, cross-checked against 2m times the
    reciprocal sum of the nonzero normalized Laplacian eigenvalues."""
    rm = resistance_matrix(g)
    deg = g.degrees()
    n = g.n_vertices
    route_a = math.fsum(deg[i] * deg[j] * rm[i, j] for i in range(n) for j in range(i + 1, n))
    spec = sym_eigenvalues(normalized_laplacian(g))
    route_b = 2 * g.n_edges * spec.recip_sum_nonzero(SPECTRAL_ZERO_TOL)
    return TwoRouteValue(route_a, route_b, "degree_kirchhoff")


@dataclass(frozen=True)
class SpanningTreeCount:
    """Exact spanning-tree count plus the float spectral diagnostic."""

    exact: int
    log_spectral: float   # natural log of the spectral-product route
    rel_delta: float
    warning: str | None = None


def _spectral_tree_log(g: Graph, spectrum: Spectrum) -> float:
    # log of (prod degrees * prod nonzero normalized eigenvalues / 2m)
    total = math.fsum(math.log(d) for d in g.degrees())
    total += math.fsum(math.log(ev) for ev in spectrum.eigenvalues if ev > SPECTRAL_ZERO_TOL)
    return total - math.log(2 * g.n_edges)


def spanning_trees(g: Graph) -> SpanningTreeCount:
    """Exact count via an integer determinant of the Laplacian with row and
    column 0 removed; the spectral product route is diagnostic only."""
    if not g.is_connected():
        raise DisconnectedGraphError("spanning trees need a connected graph")
    if g.n_vertices == 1:
        return SpanningTreeCount(1, 0.0, 0.0)
    deg = g.degrees()
    n = g.n_vertices
    minor = [[0] * (n - 1) for _ in range(n - 1)]
    for i in range(1, n):
        minor[i - 1][i - 1] = deg[i]
    for a, b in g.edges:
        if a >= 1 and b >= 1:
            minor[a - 1][b - 1] -= 1
            minor[b - 1][a - 1] -= 1
    det = bareiss_det(minor)
    assert det.denominator == 1
    exact = det.numerator

    log_route = _spectral_tree_log(g, sym_eigenvalues(normalized_laplacian(g)))
    rel_delta = abs(math.expm1(log_route - math.log(exact)))
    warning = None
    if rel_delta > FLOAT_TAU_WARN:
        warning = f"spectral tree-count route off by {rel_delta:.3e} relative"
    return SpanningTreeCount(exact, log_route, rel_delta, warning)


@dataclass(frozen=True)
class InvariantReport:
    """All invariants of one graph with per-route values and deltas."""

    graph: str
    n_vertices: int
    n_edges: int
    wiener: int
    gutman: int
    kf: TwoRouteValue
    kf_star: TwoRouteValue
    tau: SpanningTreeCount
    warnings: tuple[str, ...] = ()
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        payload = {
            "graph": self.graph,
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "wiener": self.wiener,
            "gutman": self.gutman,
            "kf": self.kf.value,
            "kf_star": self.kf_star.value,
            "tau": str(self.tau.exact),
            "routes": {
                "kf_resistance_sum": self.kf.value,
                "kf_spectral": self.kf.alternate,
                "kf_star_resistance_sum": self.kf_star.value,
                "kf_star_spectral": self.kf_star.alternate,
                "tau_exact": str(self.tau.exact),
                "tau_spectral_log": self.tau.log_spectral,
            },
            "deltas": {
                "kf": self.kf.rel_delta,
                "kf_star": self.kf_star.rel_delta,
                "tau": self.tau.rel_delta,
            },
        }
        if self.warnings:
            payload["warnings"] = list(self.warnings)
        if self.extras:
            payload.update(self.extras)
        return payload

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent) + "\n"

    CSV_HEADER = ("graph,n_vertices,n_edges,wiener,gutman,kf,kf_star,tau,"
                  "kf_delta,kf_star_delta,tau_delta")

    def to_csv_row(self) -> str:
        return ",".join([
            self.graph,
            str(self.n_vertices),
            str(self.n_edges),
            str(self.wiener),
            str(self.gutman),
            repr(self.kf.value),
            repr(self.kf_star.value),
            str(self.tau.exact),
            repr(self.kf.rel_delta),
            repr(self.kf_star.rel_delta),
            repr(self.tau.rel_delta),
        ])


def invariant_report(g: Graph, descriptor: str) -> InvariantReport:
    """Compute every invariant of a connected graph with route cross-checks."""
    kf = kirchhoff_index(g)
    kf_star = degree_kirchhoff_index(g)
    tau = spanning_trees(g)
    warnings = tuple(w for w in [tau.warning] if w)
    return InvariantReport(
        graph=descriptor,
        n_vertices=g.n_vertices,
        n_edges=g.n_edges,
        wiener=wiener(g),
        gutman=gutman(g),
        kf=kf,
        kf_star=kf_star,
        tau=tau,
        warnings=warnings,
    )
