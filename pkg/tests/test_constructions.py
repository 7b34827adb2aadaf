"""Builder output sizes, shapes, and preconditions."""

import pytest

from meshddbs import (
    LatticeParity,
    build_cycle,
    build_degree_three,
    build_edge,
    build_even_core,
    build_even_extended,
    build_family,
    build_odd_core,
    build_odd_extended,
    diameter,
    eccentricity,
    find_free_pair,
    max_degree,
)
from meshddbs.constructions import BuildParams

EVEN = LatticeParity.EVEN
ODD = LatticeParity.ODD


def n(cg):
    return len(cg.graph.vertices)


# frozen closed forms for the two-dimensional families, valid from p = 3
@pytest.mark.parametrize("p", range(3, 11))
def test_two_dim_sizes(p):
    assert n(build_even_core(2, p)) == 2 * p * p - 7
    assert n(build_even_extended(2, p)) == 2 * p * p + 2 * p - 11
    assert n(build_odd_core(2, p)) == 2 * p * p + 2 * p - 10
    assert n(build_odd_extended(2, p)) == 2 * p * p + 4 * p - 16


def test_three_dim_spot_sizes():
    assert [n(build_even_extended(3, p)) for p in (3, 4, 5)] == [11, 39, 103]
    assert [n(build_odd_extended(3, p)) for p in (3, 4, 5)] == [14, 42, 108]


def test_three_dim_cubics():
    for p in range(5, 12):
        assert 3 * n(build_even_extended(3, p)) == 4 * p**3 + 6 * p**2 - 106 * p + 189
        assert 3 * n(build_odd_extended(3, p)) == 4 * p**3 + 12 * p**2 - 154 * p + 294


def test_one_dimensional_paths():
    cg = build_even_core(1, 3)
    assert n(cg) == 7 and max_degree(cg.graph) == 2
    cg = build_odd_core(1, 2)
    assert n(cg) == 6  # true points +-1/2, +-3/2, +-5/2
    cg = build_odd_extended(1, 3)
    assert n(cg) == 8


def test_small_radius_falls_back_to_path():
    # below p = 3 the recursions degenerate to an axis path; the family
    # tag stays so condition checks use the requesting family's rules
    for build, fam in ((build_even_core, "e"), (build_even_extended, "eprime")):
        cg = build(3, 2)
        assert cg.family == fam
        assert n(cg) == 5
        assert max_degree(cg.graph) == 2
    for build, fam in ((build_odd_core, "o"), (build_odd_extended, "oprime")):
        cg = build(3, 2)
        assert cg.family == fam
        assert n(cg) == 6
        assert max_degree(cg.graph) == 2


def test_even_core_shape_small():
    cg = build_even_core(2, 3)
    assert n(cg) == 11
    assert max_degree(cg.graph) == 3
    assert eccentricity(cg.graph, (0, 0)) == 3
    assert cg.centers == ((0, 0),)


def test_even_core_degree_four_appears_later():
    assert max_degree(build_even_core(2, 4).graph) == 4


def test_even_extended_shape():
    cg = build_even_extended(2, 4)
    assert n(cg) == 29
    assert diameter(cg.graph) == 8
    assert max_degree(cg.graph) == 4


def test_odd_core_shape():
    cg = build_odd_core(2, 3)
    assert n(cg) == 14
    assert cg.centers == ((-1, 0), (1, 0))
    assert {eccentricity(cg.graph, c) for c in cg.centers} == {4}
    assert diameter(cg.graph) == 7
    cg = build_odd_core(2, 4)
    assert n(cg) == 30 and max_degree(cg.graph) == 4


def test_odd_extended_shape():
    cg = build_odd_extended(2, 4)
    assert n(cg) == 32
    assert diameter(cg.graph) <= 9


def test_odd_centers_have_degree_two():
    for k, p in [(2, 3), (2, 6), (3, 4), (4, 5)]:
        for build in (build_odd_core, build_odd_extended):
            cg = build(k, p)
            assert [cg.graph.degree(c) for c in cg.centers] == [2, 2]


def test_degree_three_sizes_and_caps():
    cg = build_degree_three(1, 5)
    assert n(cg) == 11 and max_degree(cg.graph) == 2
    cg = build_degree_three(2, 8)
    assert n(cg) == 15 and max_degree(cg.graph) <= 3
    assert diameter(build_degree_three(2, 16).graph) <= 32


def test_degree_three_precondition():
    with pytest.raises(ValueError):
        build_degree_three(3, 6)
    with pytest.raises(ValueError):
        build_degree_three(2, 3)


def test_edge_family():
    for k in (1, 3):
        cg = build_edge(k)
        assert n(cg) == 2
        assert len(cg.graph.edges) == 1
        assert diameter(cg.graph) == 1


def test_cycle_lengths_and_diameters():
    cg = build_cycle(2, 1, EVEN)
    assert n(cg) == 4 and diameter(cg.graph) == 2
    cg = build_cycle(2, 3, EVEN)
    assert n(cg) == 12 and diameter(cg.graph) == 6
    cg = build_cycle(3, 2, ODD)
    assert n(cg) == 10 and diameter(cg.graph) == 5
    assert max_degree(cg.graph) == 2


def test_cycle_preconditions():
    with pytest.raises(ValueError):
        build_cycle(1, 3, EVEN)
    with pytest.raises(ValueError):
        build_cycle(2, 0, EVEN)


def test_find_free_pair_lex_order():
    cg = build_degree_three(1, 2)
    pair = find_free_pair(cg.graph)
    assert (pair.v1, pair.v2) == ((-4,), (-2,))  # doubled [-2,-1]


def test_find_free_pair_exclusion():
    cg = build_degree_three(1, 2)
    first = find_free_pair(cg.graph)
    second = find_free_pair(cg.graph, used=frozenset([first]))
    assert second != first


def test_find_free_pair_exhaustion():
    cg = build_edge(1)
    g = cg.graph
    pair = find_free_pair(g)
    with pytest.raises(ValueError):
        find_free_pair(g, used=frozenset([pair]))


def test_build_params_validation():
    with pytest.raises(ValueError):
        BuildParams(0, 3)
    with pytest.raises(ValueError):
        BuildParams(2, -1)


def test_build_family_dispatch():
    assert build_family("e", 2, p=3).family == "e"
    assert build_family("edge", 2).family == "edge"
    assert build_family("cycle", 2, p=2, parity=ODD).graph.parity is ODD
    with pytest.raises(ValueError):
        build_family("edge", 2, p=3)  # takes no radius
    with pytest.raises(ValueError):
        build_family("zzz", 2, p=3)
    with pytest.raises(ValueError):
        build_family("e", 2)  # radius required
