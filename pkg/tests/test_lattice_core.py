"""Graph container, metric, and serialization behavior."""

import math

import pytest

from meshddbs import (
    INFINITE,
    CenteredGraph,
    LatticeParity,
    MeshGraph,
    bfs_distances,
    build_family,
    diameter,
    eccentricity,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    is_connected,
    l1_distance,
    max_degree,
    point_label,
    validate_point,
)
from meshddbs.lattice_core import true_coordinate

EVEN = LatticeParity.EVEN
ODD = LatticeParity.ODD


def test_l1_identity():
    assert l1_distance((0, 0), (0, 0)) == 0
    assert l1_distance((3, 2), (3, 2)) == 0


def test_l1_even_doubled():
    # true points (0,0) and (1,2) are 3 apart, doubled 6
    assert l1_distance((0, 0), (2, 4)) == 6


def test_l1_odd_doubled():
    # true points 1/2 and -3/2 are 2 apart, doubled 4
    assert l1_distance((1,), (-3,)) == 4


def test_l1_dimension_mismatch():
    with pytest.raises(ValueError):
        l1_distance((0, 0), (0, 0, 0))


def test_validate_point_parity():
    assert validate_point((2, -4), 2, EVEN) == (2, -4)
    assert validate_point((3, -4), 2, ODD) == (3, -4)
    with pytest.raises(ValueError):
        validate_point((1, 2), 2, EVEN)
    with pytest.raises(ValueError):
        validate_point((0, 0), 2, ODD)
    with pytest.raises(ValueError):
        validate_point((2, 3), 2, ODD)  # stacked coordinate must be even
    with pytest.raises(ValueError):
        validate_point((2,), 2, EVEN)  # wrong dimension


def test_true_coordinate_and_label():
    # renders one doubled coordinate as exact text, never a float
    assert true_coordinate(4) == "2"
    assert true_coordinate(3) == "3/2"
    assert true_coordinate(-5) == "-5/2"
    assert point_label((3, 2)) == "(3/2,1)"
    assert point_label((4, 2)) == "(2,1)"


def test_graph_canonicalizes_and_dedupes():
    g = MeshGraph(EVEN, 1, [(2,), (0,)], [((0,), (2,)), ((2,), (0,))])
    assert g.vertices == ((0,), (2,))
    assert g.edges == (((0,), (2,)),)


def test_graph_rejects_non_mesh_edge():
    with pytest.raises(ValueError):
        MeshGraph(EVEN, 2, [(0, 0), (4, 0)], [((0, 0), (4, 0))])


def test_graph_rejects_dangling_edge():
    with pytest.raises(ValueError):
        MeshGraph(EVEN, 2, [(0, 0)], [((0, 0), (0, 2))])


def test_graph_rejects_off_parity_vertex():
    with pytest.raises(ValueError):
        MeshGraph(ODD, 2, [(0, 0)], [])


def test_graph_is_immutable():
    g = MeshGraph(EVEN, 1, [(0,)], [])
    with pytest.raises(AttributeError):
        g._adj = {}


def test_graph_structural_equality():
    a = MeshGraph(EVEN, 1, [(0,), (2,)], [((0,), (2,))])
    b = MeshGraph(EVEN, 1, [(2,), (0,)], [((2,), (0,))])
    assert a == b
    assert hash(a) == hash(b)


def test_neighbors_and_degree():
    g = MeshGraph(EVEN, 2, [(0, 0), (0, 2), (2, 0)],
                  [((0, 0), (0, 2)), ((0, 0), (2, 0))])
    assert set(g.neighbors((0, 0))) == {(0, 2), (2, 0)}
    assert g.degree((0, 0)) == 2
    assert g.degree((0, 2)) == 1
    assert max_degree(g) == 2


def test_bfs_distances_path():
    g = MeshGraph(EVEN, 1, [(-2,), (0,), (2,)], [((-2,), (0,)), ((0,), (2,))])
    assert bfs_distances(g, (0,)) == {(0,): 0, (-2,): 1, (2,): 1}


def test_bfs_omits_unreachable():
    g = MeshGraph(EVEN, 2, [(0, 0), (0, 2), (4, 4)], [((0, 0), (0, 2))])
    d = bfs_distances(g, (0, 0))
    assert (4, 4) not in d
    assert len(d) == 2


def test_bfs_requires_vertex():
    g = MeshGraph(EVEN, 1, [(0,)], [])
    with pytest.raises(ValueError):
        bfs_distances(g, (2,))


def test_diameter_single_vertex():
    assert diameter(MeshGraph(EVEN, 1, [(0,)], [])) == 0


def test_diameter_grid_cycle():
    # 1 x 2 rectangle perimeter, eight vertices, diameter 4
    verts = [(x, y) for x in (0, 2, 4) for y in (0, 2, 4)]
    verts.remove((2, 2))
    edges = []
    for a in verts:
        for b in verts:
            if a < b and l1_distance(a, b) == 2:
                edges.append((a, b))
    g = MeshGraph(EVEN, 2, verts, edges)
    assert diameter(g) == 4
    assert is_connected(g)


def test_diameter_disconnected_is_infinite():
    g = MeshGraph(EVEN, 2, [(0, 0), (0, 2), (4, 4)], [((0, 0), (0, 2))])
    assert diameter(g) is INFINITE
    assert math.isinf(eccentricity(g, (4, 4)))
    assert not is_connected(g)


def test_eccentricity_star_center():
    g = MeshGraph(EVEN, 2,
                  [(0, 0), (0, 2), (0, -2), (2, 0)],
                  [((0, 0), (0, 2)), ((0, 0), (0, -2)), ((0, 0), (2, 0))])
    assert eccentricity(g, (0, 0)) == 1
    assert eccentricity(g, (2, 0)) == 2


def test_centered_graph_validates_center():
    g = MeshGraph(EVEN, 2, [(0, 0)], [])
    with pytest.raises(ValueError):
        CenteredGraph(g, ((2, 2),), 3, "e")
    with pytest.raises(ValueError):
        CenteredGraph(g, ((0, 0),), 3, "nonsense")


def test_json_round_trip_is_byte_identical():
    cg = build_family("eprime", 2, p=4)
    text = graph_to_json(cg)
    again = graph_to_json(graph_from_json(text))
    assert text == again


def test_json_rejects_tampered_family():
    cg = build_family("e", 2, p=3)
    text = graph_to_json(cg).replace('"family":"e"', '"family":"zzz"')
    with pytest.raises(ValueError):
        graph_from_json(text)


def test_dot_marks_centers():
    cg = build_family("o", 2, p=3)
    dot = graph_to_dot(cg)
    assert dot.startswith("graph mesh {")
    assert dot.count("peripheries=2") == 2
    assert '"(1/2,0)"' in dot
