from itertools import product
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from doubletile.chains import is_interleaved_double_chain, build_double_chain, theta_tile_factorizations
from doubletile.geom import NotClosed, canonical, is_simple, signed_area, tiling_cover_check
from doubletile.tiler import (
    Block, CapExceeded, InvalidBlock, deform, oracle_enumerate, render, self_avoiding_polygons,
    simple_blocks, tiling_lattices, verify_double_tile,
)
from doubletile.transforms import NotDoubleTile, NotSimple, decompose
from doubletile.words import reverse

GOLDEN = Path(__file__).parent / "golden"
CROSS = "RURULULDLDRD"

# self-avoiding polygons on the square lattice by perimeter, up to translation
SAP_COUNTS = {4: 1, 6: 2, 8: 7, 10: 28, 12: 124, 14: 588, 16: 2938}


def test_block():
    b = Block("RR", "U")
    assert b.word == "RRULLD"
    assert b.is_valid()
    assert not Block("RL", "U").is_valid()
    assert not Block("", "U").is_valid()


def test_deform_cross():
    assert canonical(deform(CROSS, Block("RR", "U"))) == "RRURRULLULLDLLDRRD"
    with pytest.raises(InvalidBlock):
        deform(CROSS, Block("R", "L"))


@given(st.sampled_from(simple_blocks(3) + simple_blocks(4)))
def test_deformed_cross_is_a_double_tile(blk):
    w = deform(CROSS, blk)
    if not is_simple(w):
        return
    v = verify_double_tile(w)
    assert v.certificate.replay() == v.certificate.word


def test_verify_cross():
    v = verify_double_tile(CROSS)
    assert {tuple(map(tuple, (lat.g1, lat.g2))) for lat in v.lattices} == {((2, 1), (-1, 2)), ((1, 2), (-2, 1))}


def test_verify_accepts_clockwise_words():
    v = verify_double_tile(reverse(CROSS))
    assert signed_area(v.certificate.word) == 5


def test_verify_rejections():
    with pytest.raises(NotDoubleTile):
        verify_double_tile("RRULLD")
    with pytest.raises(NotClosed):
        verify_double_tile("RRU")
    with pytest.raises(NotSimple):
        verify_double_tile("RULDRULD")


def test_sap_counts_match_known_values():
    words = self_avoiding_polygons(16)
    counts = {}
    for w in words:
        counts[len(w)] = counts.get(len(w), 0) + 1
    assert counts == SAP_COUNTS
    assert len(set(words)) == len(words)
    assert all(canonical(w) == w for w in words)


def test_sap_search_against_brute_force():
    brute = set()
    for n in range(4, 11, 2):
        for letters in product("RULD", repeat=n):
            w = "".join(letters)
            if is_simple(w):
                brute.add(canonical(w))
    assert brute == set(self_avoiding_polygons(10))


def test_oracle_small_bounds():
    assert oracle_enumerate(10).words == []
    assert oracle_enumerate(12).words == [CROSS]
    with pytest.raises(CapExceeded):
        oracle_enumerate(22)


def test_oracle_jobs_do_not_change_output():
    assert oracle_enumerate(16, jobs=2).words == oracle_enumerate(16).words


def test_oracle_tiles_give_interleaved_chains_and_lattices(oracle20):
    for t in oracle20.tiles:
        assert "non-interleaved" not in t.chain_kinds
        facts = theta_tile_factorizations(t.word)
        chain, kind, _ = build_double_chain(t.word, facts[0], facts[1])
        assert is_interleaved_double_chain(chain)
        for lat in tiling_lattices(decompose(t.word)):
            assert tiling_cover_check(t.word, lat, 2 * max(4, len(t.word) // 2))


def test_render_outline_is_plain_svg():
    svg = render(CROSS)
    assert svg.startswith("<svg xmlns=\"http://www.w3.org/2000/svg\"")
    assert "href" not in svg and "<image" not in svg
    assert svg == (GOLDEN / "render_cross_outline.svg").read_text()


def test_render_with_tilings():
    assert render(CROSS, decompose(CROSS)) == (GOLDEN / "render_cross.svg").read_text()
    with pytest.raises(NotClosed):
        render("RU")
