from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from doubletile.descend import descendant, enumerate_descendants, neighbourhood_vectors
from doubletile.gaussian import (
    BadPair, WrongArea, chain_cells, clover_octuple_matches, clover_plan, clovers_for, grid_graph,
    is_clover, is_clover_geometric, is_clover_syntactic, is_connected, is_proper, is_z_good,
    lattices, mebane_construction, normalize, star,
)
from doubletile.geom import Lattice

PAIRS = [(a, b) for b in range(1, 10) for a in range(1, b) if a * a + b * b < 100 and is_proper(a, b)]


def z_good_by_lattices(cells, a, b):
    lats = lattices(a, b)
    return all(not lat.contains((p[0] - q[0], p[1] - q[1]))
               for p, q in combinations(cells, 2) for lat in lats)


def test_proper_pairs():
    assert is_proper(1, 2) and is_proper(2, 5)
    assert not is_proper(1, 1)  # p = 2 is even
    assert not is_proper(1, 7)  # 50 is composite
    assert sorted(a * a + b * b for a, b in PAIRS) == [5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97]


def test_lattices_have_covolume_p():
    for a, b in PAIRS:
        for lat in lattices(a, b):
            assert abs(lat.det) == a * a + b * b


def test_cross_is_z_good():
    cross = [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]
    assert is_z_good(cross, 1, 2)
    bar = [(0, k) for k in range(5)]
    assert is_z_good(bar, 1, 2) and z_good_by_lattices(bar, 1, 2)
    square_ish = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)]
    assert not is_z_good(square_ish, 1, 2) and not z_good_by_lattices(square_ish, 1, 2)
    with pytest.raises(WrongArea):
        is_z_good(cross[:4], 1, 2)


@given(st.sampled_from(PAIRS), st.data())
def test_z_good_residues_match_lattice_membership(pair, data):
    a, b = pair
    p = a * a + b * b
    cells = data.draw(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
                               min_size=p, max_size=p, unique=True))
    assert is_z_good(cells, a, b) == z_good_by_lattices(cells, a, b)


def test_grid_graph_small():
    g = grid_graph(1, 2)
    assert g.isolated == ((1, 1),)
    assert sum(len(c) for c in g.cycles) == 8
    assert all(len(c) % 2 == 0 for c in g.cycles)


def test_isolated_count():
    for a in range(1, 13):
        for b in range(a + 1, 14 - a):
            if is_proper(a, b):
                assert len(grid_graph(a, b).isolated) == (b - a) ** 2


def test_mebane_small():
    assert mebane_construction(1, 2) == [frozenset({(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)})]
    shapes = mebane_construction(2, 5)
    assert len(shapes) == 1 and len(shapes[0]) == 29


def test_mebane_shapes_are_connected_and_z_good():
    for a, b in PAIRS:
        for s in mebane_construction(a, b):
            assert is_connected(s)
            assert z_good_by_lattices(s, a, b)


def test_normalize_and_connectivity():
    assert normalize([(3, 4), (4, 4)]) == frozenset({(0, 0), (1, 0)})
    assert not is_connected([(0, 0), (2, 0)])
    assert not is_connected([])


def test_clover_plan():
    assert clover_plan(1, 2).steps == ()
    assert clover_plan(2, 5).steps == ("g*",)
    assert clover_plan(5, 2) == clover_plan(2, 5)
    ks = {a * a + b * b: clover_plan(a, b).k for a, b in PAIRS}
    assert {p for p, k in ks.items() if k == 1} == {29, 73, 89, 97}
    assert set(ks.values()) == {0, 1}
    with pytest.raises(BadPair):
        clover_plan(1, 7)


def test_clovers_are_z_good_and_match_star():
    for a, b in PAIRS:
        plan = clover_plan(a, b)
        found = clovers_for(a, b)
        assert len(found) == 2 ** plan.k
        for d in found:
            assert z_good_by_lattices(chain_cells(d.chain), a, b)
            assert is_clover(d)
            assert clover_octuple_matches(d, a, b, plan.k)


def test_mebane_shape_is_one_of_the_clovers():
    for a, b in PAIRS:
        clovers = {chain_cells(d.chain) for d in clovers_for(a, b)}
        assert set(mebane_construction(a, b)) <= clovers


def test_clover_lattice_for_5_plus_2i():
    (d,) = [d for d in clovers_for(2, 5) if d.descent == ("go",)]
    s = neighbourhood_vectors(d.chain)
    # the tiling lattice spanned by s1, s3 equals L(5 + 2i) up to sign
    assert Lattice(s[0], s[2]).same_as(Lattice((5, 2), (-2, 5)))
    assert star(2, 5)[0] == (5, 2)


def test_clover_checks_agree_on_descendants():
    found = 0
    for d in enumerate_descendants(30):
        if is_clover(d):
            found += 1
            assert is_clover_syntactic(d.descent) and is_clover_geometric(d.chain)
    assert found > 5


def test_non_clover_examples():
    assert not is_clover(descendant(["f1"]))
    assert is_clover(descendant(["f1", "f3"]))
