from collections import Counter

import pytest
from hypothesis import given, strategies as st

from doubletile.words import (
    EMPTY, MIXED, NEGATIVE, POSITIVE, SQUARE, Alphabet, ImaginaryWord, balanced_subwords,
    classify, combinatorial_self_intersections, cyclic_shift, has_combinatorial_self_intersection,
    iconcat, ilength, inegate, ireverse, is_balanced, reverse, substitute,
)

words = st.text(alphabet="RULD", max_size=24)


def balanced_by_count(w):
    c = Counter(w)
    return c["R"] == c["L"] and c["U"] == c["D"]


def test_reverse_examples():
    assert reverse("RUR") == "LDL"
    assert reverse("") == ""
    assert reverse("RRUL") == "RDLL"


def test_alphabet_rejects_non_involution():
    with pytest.raises(ValueError):
        Alphabet({"a": "b", "b": "c"})


def test_tuple_words_over_custom_alphabet():
    ab = Alphabet.from_pairs(("x1", "y1"), ("x2", "y2"))
    assert reverse(("x1", "x2"), ab) == ("y2", "y1")
    assert is_balanced(("x1", "x2", "y1", "y2"), ab)


def test_balanced_examples():
    assert is_balanced("")
    assert is_balanced("RULD")
    assert not is_balanced("RUL")


def test_self_intersection_examples():
    assert has_combinatorial_self_intersection("RL")
    assert combinatorial_self_intersections("RL") == [(0, 2)]
    assert not has_combinatorial_self_intersection("RULD")
    assert has_combinatorial_self_intersection("RULDRULD")
    assert not has_combinatorial_self_intersection("RURULULDLDRD")


def test_cyclic_shift():
    assert cyclic_shift("RULD", 1) == "ULDR"
    assert cyclic_shift("RULD", -1) == "DRUL"
    assert cyclic_shift("", 3) == ""


@given(words)
def test_reverse_is_involution(w):
    assert reverse(reverse(w)) == w
    assert len(reverse(w)) == len(w)


@given(words, words)
def test_reverse_antihomomorphism(a, b):
    assert reverse(a + b) == reverse(b) + reverse(a)


@given(words)
def test_balance_matches_letter_counts(w):
    assert is_balanced(w) == balanced_by_count(w)
    brute = sorted((i, j - i) for i in range(len(w)) for j in range(i + 1, len(w) + 1)
                   if balanced_by_count(w[i:j]))
    assert balanced_subwords(w) == brute


@given(words)
def test_self_intersection_is_visiting_a_vertex_twice(w):
    x = y = 0
    pts = [(0, 0)]
    step = {"R": (1, 0), "L": (-1, 0), "U": (0, 1), "D": (0, -1)}
    for c in w:
        x, y = x + step[c][0], y + step[c][1]
        pts.append((x, y))
    closed = pts[-1] == (0, 0)
    inner = pts[:-1] if closed and w else pts
    repeat = len(set(inner)) != len(inner)
    if len(w) == 2 and reverse(w[0]) == w[1]:
        repeat = True
    assert has_combinatorial_self_intersection(w) == repeat


@given(words, st.text(alphabet="RULD", min_size=1, max_size=4), st.text(alphabet="RULD", min_size=1, max_size=4))
def test_substitution_commutes_with_reversal(w, a, b):
    m = {"R": a, "U": b}
    assert substitute(reverse(w), m) == reverse(substitute(w, m))


def test_substitution_rejects_inconsistent_images():
    with pytest.raises(ValueError):
        substitute("RL", {"R": "U", "L": "U"})


def test_imaginary_reduction_and_classes():
    w = iconcat("RU", inegate("U"), "L")
    assert w.entries == (("R", 1), ("L", 1))
    assert ilength(w) == 2
    assert classify("RU") == POSITIVE
    assert classify(inegate("R")) == NEGATIVE
    assert classify(iconcat("R", inegate("U"))) == MIXED
    assert classify(iconcat("R", inegate("R"))) == EMPTY


def test_imaginary_to_word():
    assert ImaginaryWord.of("RUL").to_word("") == "RUL"
    with pytest.raises(ValueError):
        inegate("R").to_word("")


@given(words, words)
def test_imaginary_group_laws(a, b):
    assert iconcat(a, inegate(a)).entries == ()
    assert ilength(iconcat(a, b)) == len(a) + len(b)
    assert ireverse(a).to_word("") == reverse(a)
    assert ireverse(iconcat(a, b)) == iconcat(ireverse(b), ireverse(a))
