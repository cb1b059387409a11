"""Distance, resistance, Kirchhoff-type indices and spanning-tree counts.

Frozen expected values for the prisms come from standalone BFS double loops
and integer determinant computations run outside this package.
"""

import json

import pytest

from polyprism.errors import DisconnectedGraphError
from polyprism.graphs import Graph, linear_polyomino, standard_graph, strong_prism_polyomino
from polyprism.invariants import (
    degree_kirchhoff_index,
    distance_matrix,
    gutman,
    invariant_report,
    kirchhoff_index,
    resistance_matrix,
    spanning_trees,
    wiener,
)

# BFS/determinant oracle values for the first prisms
PRISM_WIENER = {1: 36, 2: 106, 3: 232}
PRISM_GUTMAN = {1: 900, 2: 3274, 3: 7944, 4: 15694}
PRISM_TAU = {1: 20736, 2: 19906560, 3: 19025362944, 4: 18177375338496}


def test_distance_matrix_small():
    dm = distance_matrix(standard_graph("path", 3))
    assert dm[0, 2] == 2 and dm[0, 1] == 1 and dm[1, 1] == 0
    dm = distance_matrix(standard_graph("cycle", 4))
    assert dm[0, 2] == 2 and dm[1, 3] == 2


def test_distance_matrix_prism_rows():
    dm = distance_matrix(strong_prism_polyomino(1))
    for i in range(8):
        row = [dm[i, j] for j in range(8) if j != i]
        assert sorted(row) == [1] * 5 + [2] * 2


def test_distance_matrix_disconnected():
    with pytest.raises(DisconnectedGraphError):
        distance_matrix(Graph(3, frozenset({(0, 1)})))


def test_distance_matrix_symmetry_and_triangle():
    g = strong_prism_polyomino(3)
    dm = distance_matrix(g)
    n = g.n_vertices
    for i in range(n):
        assert dm[i, i] == 0
        for j in range(n):
            assert dm[i, j] == dm[j, i]
            for k in range(n):
                assert dm[i, j] <= dm[i, k] + dm[k, j]


def test_wiener_values():
    assert wiener(standard_graph("path", 3)) == 4
    assert wiener(standard_graph("cycle", 4)) == 8
    for n, expected in PRISM_WIENER.items():
        assert wiener(strong_prism_polyomino(n)) == expected


def test_gutman_values():
    assert gutman(standard_graph("complete", 2)) == 1
    for n, expected in PRISM_GUTMAN.items():
        assert gutman(strong_prism_polyomino(n)) == expected
    # 5-regular graph: degree weights factor out as 25
    assert PRISM_GUTMAN[1] == 25 * PRISM_WIENER[1]


def test_resistance_known_values():
    r = resistance_matrix(standard_graph("complete", 2))
    assert r[0, 1] == pytest.approx(1.0, rel=1e-12)
    r = resistance_matrix(standard_graph("cycle", 4))
    assert r[0, 1] == pytest.approx(0.75, rel=1e-12)
    assert r[0, 2] == pytest.approx(1.0, rel=1e-12)


def test_resistance_equals_distance_on_trees():
    for g in (standard_graph("path", 3), standard_graph("path", 7)):
        r = resistance_matrix(g)
        dm = distance_matrix(g)
        for i in range(g.n_vertices):
            for j in range(g.n_vertices):
                assert r[i, j] == pytest.approx(dm[i, j], abs=1e-10)


def test_resistance_bounded_by_distance():
    for g in (standard_graph("cycle", 6), strong_prism_polyomino(3),
              linear_polyomino(4), standard_graph("complete", 5)):
        r = resistance_matrix(g)
        dm = distance_matrix(g)
        for i in range(g.n_vertices):
            for j in range(g.n_vertices):
                assert r[i, j] <= dm[i, j] + 1e-9


def test_kirchhoff_cycle_and_tree():
    kf = kirchhoff_index(standard_graph("cycle", 4))
    assert kf.value == pytest.approx(5.0, rel=1e-10)
    assert kf.alternate == pytest.approx(5.0, rel=1e-10)
    kf = kirchhoff_index(standard_graph("path", 3))
    assert kf.value == pytest.approx(4.0, rel=1e-10)  # equals the distance sum


def test_kirchhoff_routes_agree():
    for g in (strong_prism_polyomino(1), strong_prism_polyomino(4),
              standard_graph("cycle", 9)):
        kf = kirchhoff_index(g)
        assert kf.rel_delta <= 1e-10


def test_degree_kirchhoff_small_values():
    dk = degree_kirchhoff_index(standard_graph("complete", 2))
    assert dk.value == pytest.approx(1.0, rel=1e-12)
    # on a tree this equals the degree-weighted distance sum
    p3 = standard_graph("path", 3)
    dk = degree_kirchhoff_index(p3)
    assert dk.value == pytest.approx(gutman(p3), rel=1e-10)
    assert dk.value == pytest.approx(6.0, rel=1e-10)
    assert dk.alternate == pytest.approx(6.0, rel=1e-10)


def test_degree_kirchhoff_prism_value():
    dk = degree_kirchhoff_index(strong_prism_polyomino(2))
    assert dk.value == pytest.approx(11726 / 15, rel=1e-9)
    assert dk.rel_delta <= 1e-9


def test_route_deltas_across_families():
    graphs = [strong_prism_polyomino(n) for n in range(1, 9)]
    graphs += [standard_graph("cycle", 12), standard_graph("complete", 8),
               linear_polyomino(10)]
    for g in graphs:
        assert kirchhoff_index(g).rel_delta <= 1e-9
        assert degree_kirchhoff_index(g).rel_delta <= 1e-9


def test_spanning_trees_cycles_and_completes():
    for n in range(3, 9):
        assert spanning_trees(standard_graph("cycle", n)).exact == n
    for n in range(2, 9):
        assert spanning_trees(standard_graph("complete", n)).exact == n ** (n - 2)


def test_spanning_trees_prisms():
    for n, expected in PRISM_TAU.items():
        count = spanning_trees(strong_prism_polyomino(n))
        assert count.exact == expected
        assert count.rel_delta <= 1e-6
        assert count.warning is None


def test_spanning_trees_probe_never_overrides():
    count = spanning_trees(strong_prism_polyomino(2))
    assert isinstance(count.exact, int)
    assert count.exact == 19906560


def test_spanning_trees_single_vertex_and_disconnected():
    assert spanning_trees(Graph(1, frozenset())).exact == 1
    with pytest.raises(DisconnectedGraphError):
        spanning_trees(Graph(4, frozenset({(0, 1), (2, 3)})))


def test_tree_identities_kirchhoff_equals_distance_sums():
    for n in (2, 3, 5, 8):
        t = standard_graph("path", n)
        assert kirchhoff_index(t).value == pytest.approx(wiener(t), abs=1e-10)
        assert degree_kirchhoff_index(t).value == pytest.approx(gutman(t), abs=1e-10)


def test_invariant_report_fields_and_json():
    g = strong_prism_polyomino(2)
    report = invariant_report(g, "prism-polyomino(n=2)")
    assert report.wiener == 106
    assert report.gutman == 3274
    assert report.tau.exact == 19906560
    data = json.loads(report.to_json())
    assert data["tau"] == "19906560"
    assert data["wiener"] == 106
    assert set(data["routes"]) == {
        "kf_resistance_sum", "kf_spectral", "kf_star_resistance_sum",
        "kf_star_spectral", "tau_exact", "tau_spectral_log"}
    assert set(data["deltas"]) == {"kf", "kf_star", "tau"}
    assert data["deltas"]["kf_star"] <= 1e-9


def test_invariant_report_csv_row():
    g = standard_graph("cycle", 4)
    report = invariant_report(g, "cycle(n=4)")
    row = report.to_csv_row()
    fields = row.split(",")
    header = report.CSV_HEADER.split(",")
    assert len(fields) == len(header)
    assert fields[header.index("wiener")] == "8"
    assert fields[header.index("tau")] == "4"
