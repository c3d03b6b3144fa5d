import json

import pytest
from hypothesis import given, strategies as st

from doubletile.chains import WordChain, is_interleaved_double_chain, lengths, type_of
from doubletile.descend import enumerate_descendants
from doubletile.geom import NotClosed
from doubletile.transforms import (
    GREEK_CROSS, DoubleTileCertificate, IrregularG, Loop, NotApplicable, NotDoubleTile,
    NotReducible, NotSimple, Root, apply_descent, canonical_descent, decompose, descent_orbit,
    f_lift, f_reduce, format_descent, g_transform, gstar_composed, gstar_lift, is_false_f_reduction,
    lift, parse_descent, reduce_to_base, repackage_descent,
)
from doubletile.words import cyclic_shift, reverse, substitute

CROSS = GREEK_CROSS
ROOT = WordChain(("R", "", "U", "", "L", "", "D", ""))
DESC = enumerate_descendants(22)
descendants = st.sampled_from(DESC)
indices = st.integers(1, 4)


def test_f_lift_example():
    assert str(f_lift(CROSS, 1)) == "RURDR:UR:U:LU:LDLUL:DL:D:RD"
    assert type_of(f_lift(CROSS, 1)) == (5, 2, 1, 2)


def test_f_reduce_example():
    assert str(f_reduce(CROSS, 2)) == "R:-:U:LU:L:-:D:RD"
    assert is_false_f_reduction(CROSS, 2) is False
    with pytest.raises(NotReducible):
        f_reduce(CROSS, 1)


def test_gstar_example():
    g = gstar_lift(CROSS, "odd")
    assert g[1] == "DLDLULU"
    assert type_of(g) == (7, 4, 7, 4)
    assert str(gstar_lift(ROOT, "odd")) == "DLU:LD:RDL:DR:URD:RU:LUR:UL"


def test_g_not_applicable_on_root():
    with pytest.raises(NotApplicable):
        g_transform(ROOT, "odd")


@given(descendants, indices)
def test_f_reduce_inverts_f_lift(d, i):
    v = f_lift(d.chain, i)
    assert is_interleaved_double_chain(v)
    assert f_reduce(v, i) == d.chain


@given(descendants, indices)
def test_f_type_recurrence(d, i):
    a = lengths(d.chain)
    b = lengths(f_lift(d.chain, i))
    for j in range(1, 5):
        want = a.at(j - 1) + a.at(j) + a.at(j + 1) if (j - i) % 4 == 0 else a.at(j)
        assert b.at(j) == want


@given(descendants, st.sampled_from(["odd", "even"]))
def test_gstar_matches_composition_and_type(d, parity):
    u = d.chain
    v = gstar_lift(u, parity)
    assert v == gstar_composed(u, parity)
    a = lengths(u)
    odd = parity == "odd"
    for j in range(1, 5):
        if (j % 2 == 1) == odd:
            want = sum(a.at(j + k) for k in range(-2, 3))
        else:
            want = sum(a.at(j + k) for k in range(3, 6))
        assert lengths(v).at(j) == want


@given(descendants, st.sampled_from(["odd", "even"]))
def test_g_is_an_involution_where_defined(d, parity):
    try:
        v = g_transform(d.chain, parity)
    except (NotApplicable, ValueError, AssertionError):
        return
    assert g_transform(v, parity) == d.chain


def test_lift_tags():
    assert lift(CROSS, "fEven") == f_lift(f_lift(CROSS, 2), 4)
    assert lift(CROSS, "go") == gstar_lift(CROSS, "odd")
    with pytest.raises(ValueError):
        lift(CROSS, "f9")


def test_descent_text():
    assert parse_descent("f2, go,f1") == ["f2", "go", "f1"]
    assert parse_descent("") == []
    assert format_descent(["f1", "ge"]) == "f1,ge"
    with pytest.raises(ValueError):
        parse_descent("fx")


def test_canonical_descent_sorts_commuting_runs():
    assert canonical_descent(["f3", "f1", "go", "f4", "f2", "f1"]) == ["f1", "f3", "go", "f2", "f4", "f1"]


@given(descendants)
def test_commuting_f_lifts(d):
    for i in (1, 2):
        assert f_lift(f_lift(d.chain, i), i + 2) == f_lift(f_lift(d.chain, i + 2), i)


def test_reduce_cross():
    log = reduce_to_base(CROSS)
    assert log.steps == ["fEven"]
    assert log.base == Root("R", "U", 0)
    assert repackage_descent(log.steps) == ["f2", "f4"]


def test_reduce_gstar_of_cross():
    log = reduce_to_base(gstar_lift(CROSS, "odd"))
    assert log.steps == ["gOdd", "fEven", "fEven"]
    assert repackage_descent(log.steps) == ["f2", "f4", "go"]


def test_repackage_rejects_stray_g():
    with pytest.raises(IrregularG):
        repackage_descent(["gOdd"])


def test_genuine_loop_is_a_base():
    loop = WordChain.parse("RURR:DR:U:LLD:LULL:DL:U:RRD")
    log = reduce_to_base(loop)
    assert log.steps == [] and isinstance(log.base, Loop)


@given(descendants)
def test_reduction_recovers_descendants(d):
    log = reduce_to_base(d.chain)
    root = log.base
    assert isinstance(root, Root)
    u = root.chain(d.chain.rev)
    for t in reversed(log.steps):
        u = lift(u, {"gOdd": "gOdd", "gEven": "gEven"}.get(t, t))
    assert u == d.chain


def test_decompose_cross_and_deformations():
    w = CROSS.concat()
    cert = decompose(w)
    assert (cert.root_x, cert.root_y, cert.descent, cert.shift) == ("R", "U", (), 0)
    big = substitute(w, {"R": "RR"})
    cert = decompose(big)
    assert (cert.root_x, cert.root_y, cert.descent) == ("RR", "U", ())


def test_decompose_errors():
    with pytest.raises(NotDoubleTile) as e:
        decompose("RRULLD")
    assert e.value.reason == "SingleTiling"
    with pytest.raises(NotClosed):
        decompose("RRU")
    with pytest.raises(NotSimple):
        decompose("RULDRULD")
    with pytest.raises(ValueError):
        decompose(reverse(CROSS.concat()))


@given(descendants, st.integers(0, 200))
def test_decompose_replays_rotations(d, k):
    w = cyclic_shift(d.word, k)
    cert = decompose(w)
    assert cert.replay() == w
    assert cert.descent in descent_orbit(d.descent)


def test_certificate_json_round_trip():
    cert = decompose(apply_descent(["go"]).concat())
    data = json.loads(cert.to_json())
    assert data["format"] == 1
    assert DoubleTileCertificate.from_json(cert.to_json()) == cert
    with pytest.raises(ValueError):
        DoubleTileCertificate.from_json(json.dumps({**data, "format": 2}))


def test_descent_orbit():
    orbit = descent_orbit(["ge", "f2"])
    assert ("ge", "f2") in orbit and ("go", "f1") in orbit and ("ge", "f4") in orbit
