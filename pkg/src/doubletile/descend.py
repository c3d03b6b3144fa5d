"""Descendants of the Greek cross, their vectors, and checks on them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chains import WordChain, is_interleaved_double_chain
from .geom import INSIDE, Vec2, cross, point_in_polygon, signed_area, span, vertices
from .transforms import (
    F_TAGS, GREEK_CROSS, MAIN_TAGS, apply_descent, canonical_descent, f_lift, lift,
)
from .words import has_combinatorial_self_intersection

HALF_TURN = str.maketrans("RLUD", "LRDU")


@dataclass(frozen=True)
class DescendantChain:
    chain: WordChain
    descent: tuple

    @property
    def word(self) -> str:
        return self.chain.concat()

    @property
    def half_length(self) -> int:
        return len(self.chain) // 2


def greek_cross() -> DescendantChain:
    return DescendantChain(GREEK_CROSS, ())


def descendant(tags: Sequence[str]) -> DescendantChain:
    for t in tags:
        if t not in MAIN_TAGS:
            raise ValueError(f"unknown descent tag {t!r}")
    return DescendantChain(apply_descent(tags), tuple(canonical_descent(tags)))


def _may_follow(prev: str | None, t: str) -> bool:
    # within a run of commuting f-lifts only ascending order is canonical
    if prev in F_TAGS and t in F_TAGS and int(prev[1]) % 2 == int(t[1]) % 2:
        return prev <= t
    return True


def enumerate_descendants(max_half_perimeter: int) -> list[DescendantChain]:
    """All descendants with ``|U|/2`` at most the bound, one per canonical descent.

    Every lift strictly lengthens a descendant, so the search tree is finite.
    """
    out = []

    def walk(u: WordChain, tags: tuple):
        out.append(DescendantChain(u, tags))
        prev = tags[-1] if tags else None
        for t in MAIN_TAGS:
            if not _may_follow(prev, t):
                continue
            v = lift(u, t, check=False)
            if len(v) // 2 <= max_half_perimeter:
                walk(v, tags + (t,))

    if len(GREEK_CROSS) // 2 <= max_half_perimeter:
        walk(GREEK_CROSS, ())
    out.sort(key=lambda d: (len(d.chain), d.descent))
    return out


# ------------------------------------------------------------------------ vectors

def partial_vectors(u: WordChain) -> tuple[Vec2, ...]:
    return tuple(span(p) for p in u.parts)


def neighbourhood_vectors(u: WordChain) -> tuple[Vec2, ...]:
    p = partial_vectors(u)
    return tuple(p[i] + p[(i + 1) % 8] for i in range(8))


def _at(v, i):
    return v[(i - 1) % 8]


def _vsum(*vs):
    return Vec2(sum(v[0] for v in vs), sum(v[1] for v in vs))


def neighbourhood_recurrence(s: Sequence, tag: str) -> tuple[Vec2, ...]:
    """Neighbourhood vectors of a lift, computed from those of the chain."""
    if tag in ("go", "ge", "g*"):
        return tuple(-_vsum(_at(s, i - 1), _at(s, i), _at(s, i + 1)) for i in range(1, 9))
    if tag in ("fOdd", "fEven"):
        a, b = ("f1", "f3") if tag == "fOdd" else ("f2", "f4")
        return neighbourhood_recurrence(neighbourhood_recurrence(s, a), b)
    i = int(tag[1])
    out = []
    for j in range(1, 9):
        if (j - i) % 4 == 0:
            out.append(_at(s, j) + _at(s, j + 1) - _at(s, j + 2))
        elif (j - i - 3) % 4 == 0:
            out.append(_at(s, j) + _at(s, j - 1) - _at(s, j - 2))
        else:
            out.append(vec2(_at(s, j)))
    return tuple(out)


def partial_recurrence(u: Sequence, tag: str) -> tuple[Vec2, ...]:
    """Partial vectors of a lift, computed from those of the chain."""
    if tag in ("go", "ge", "g*"):
        return tuple(-_vsum(_at(u, i - 1), _at(u, i), _at(u, i + 1)) for i in range(1, 9))
    i = int(tag[1])
    return tuple(_vsum(_at(u, j - 1), _at(u, j), _at(u, j + 1)) if (j - i) % 4 == 0
                 else vec2(_at(u, j)) for j in range(1, 9))


def vec2(v) -> Vec2:
    return v if isinstance(v, Vec2) else Vec2(v[0], v[1])


def partial_from_neighbourhood(s: Sequence) -> tuple[Vec2, ...]:
    """Invert ``s_i = u_i + u_(i+1)`` using ``u_(i+4) = -u_i``."""
    s = [vec2(x) for x in s]
    out = []
    for i in range(1, 9):
        t = _at(s, i) - _at(s, i + 1) + _at(s, i + 2) - _at(s, i + 3)
        if t.x % 2 or t.y % 2:
            raise ValueError("octuple is not the neighbourhood octuple of any chain")
        out.append(Vec2(t.x // 2, t.y // 2))
    return tuple(out)


def cross_table(v: Sequence) -> dict[tuple[int, int], int]:
    return {(i, j): cross(_at(v, i), _at(v, j)) for i in range(1, 5) for j in range(i + 1, 5)}


# --------------------------------------------------------------------- invariants

def check_invariants(u: WordChain) -> list[str]:
    """Violations of the structural properties every descendant should have."""
    problems = []
    if not is_interleaved_double_chain(u):
        problems.append("not an interleaved double chain")
    w = u.concat()
    if span(w) != (0, 0):
        problems.append("chain does not close")
        return problems
    if has_combinatorial_self_intersection(w):
        problems.append("self-intersection")
    for i in range(1, 5):
        if u[i + 4] != u[i].translate(HALF_TURN):
            problems.append(f"central symmetry fails at part {i}")
    pts = division_points(u)
    centre = {(pts[i][0] + pts[i + 4][0], pts[i][1] + pts[i + 4][1]) for i in range(4)}
    if len(centre) != 1:
        problems.append("division points are not centrally symmetric")
    uu = partial_vectors(u)
    ss = neighbourhood_vectors(u)
    for (i, j), c in cross_table(uu).items():
        if c <= 0:
            problems.append(f"u{i}{j} = {c} is not positive")
    st = cross_table(ss)
    for (i, j), c in st.items():
        if c <= 0:
            problems.append(f"s{i}{j} = {c} is not positive")
    area = signed_area(w)
    if not (area == st[(1, 3)] == st[(2, 4)] and area > 0):
        problems.append(f"area {area} disagrees with s13 = {st[(1, 3)]}, s24 = {st[(2, 4)]}")
    return problems


def division_points(u: WordChain, start=(0, 0)) -> list[tuple[int, int]]:
    """``P_1 .. P_8``: the start point of each part."""
    pts = [tuple(start)]
    for p in u.parts[:-1]:
        v = span(p)
        pts.append((pts[-1][0] + v.x, pts[-1][1] + v.y))
    return pts


# ----------------------------------------------------------------------- goodness

def _placed_part(u: WordChain, k: int, anchor: int, at) -> list[tuple[int, int]]:
    """Vertices of part ``k`` when ``U`` is translated so that ``P_anchor`` sits at ``at``."""
    pts = division_points(u)
    pa = pts[(anchor - 1) % 8]
    pk = pts[(k - 1) % 8]
    start = (at[0] - pa[0] + pk[0], at[1] - pa[1] + pk[1])
    return vertices(u[k], start)


def _placed(u: WordChain, first: int, last: int, anchor: int, at) -> list[tuple[int, int]]:
    pts = []
    for k in range(first, last + 1):
        part = _placed_part(u, k, anchor, at)
        pts.extend(part if not pts else part[1:])
    return pts


def _open_inside(path: list[tuple[int, int]], v_word: str, v_start) -> bool:
    for p in path[1:-1]:
        if point_in_polygon(p, v_word, v_start) != INSIDE:
            return False
    for (x0, y0), (x1, y1) in zip(path, path[1:]):
        mid = (Fraction(x0 + x1, 2), Fraction(y0 + y1, 2))
        if point_in_polygon(mid, v_word, v_start) != INSIDE:
            return False
    return True


def f_goodness_forms(u: WordChain, i: int) -> tuple[bool, bool]:
    """f_i-goodness, by definition and by the disjointness criterion.

    ``U-`` and ``U+`` are the translates of ``U`` that share parts
    ``i+5..i+7`` and ``i+1..i+3`` with ``V = f_i(U)``.
    """
    v = f_lift(u, i)
    q = division_points(v)
    at_minus = q[(i + 4) % 8]   # Q_(i+5)
    at_plus = q[i % 8]          # Q_(i+1)
    u_simple = not has_combinatorial_self_intersection(u.concat())
    v_simple = not has_combinatorial_self_intersection(v.concat())
    vw = v.concat()
    definitional = (
        u_simple and v_simple
        and _open_inside(_placed_part(u, i + 2, i + 5, at_minus), vw, q[0])
        and _open_inside(_placed_part(u, i + 6, i + 1, at_plus), vw, q[0])
    )
    minus = set(_placed(u, 1, 8, i + 5, at_minus))
    plus_mid = set(_placed(u, i + 1, i + 3, i + 1, at_plus))
    criterion = u_simple and not (minus & plus_mid)
    return definitional, criterion


def verify_f_goodness(u: WordChain, i: int) -> bool:
    definitional, criterion = f_goodness_forms(u, i)
    return definitional


def fully_f_good(u: WordChain) -> bool:
    """f_i-good for every i, plus the pair conditions behind fOdd and fEven goodness."""
    for i in range(1, 5):
        if not verify_f_goodness(u, i):
            return False
        if not verify_f_goodness(f_lift(u, i), (i + 1) % 4 + 1):
            return False
    return True


# ------------------------------------------------------------------ proto-descents

def proto_descent(tags: Sequence[str]) -> list[str]:
    return ["g*" if t in ("go", "ge") else t for t in tags]


class NotReachable(ValueError):
    pass


def _ends_with_f1(u) -> bool:
    c = cross_table(u)
    return (c[1, 3] > max(c[2, 3], c[3, 4])) and (min(c[1, 2], c[1, 4]) > c[2, 4])


def _last_step(u) -> str | None:
    for i in range(1, 5):
        # the f_i test is the f_1 test on the octuple rotated to start at u_i
        if _ends_with_f1(tuple(_at(u, i + k) for k in range(8))):
            return f"f{i}"
    c = cross_table(u)
    if min(c[1, 3], c[2, 4]) > max(c[1, 2], c[2, 3], c[3, 4], c[1, 4]):
        return "g*"
    return None


def _undo(u, step: str):
    if step == "g*":
        v1, v2, v3, v4 = (_at(u, k) for k in range(1, 5))
        first = [v1 - v2 + v4, -v3 - v1 + v2, -v2 + v3 - v4, v1 - v3 + v4]
    else:
        i = int(step[1])
        first = [(_at(u, j) - _at(u, j - 1) - _at(u, j + 1)) if (j - i) % 4 == 0 else _at(u, j)
                 for j in range(1, 5)]
    return tuple(first + [-x for x in first])


def recover_proto_descent(s: Sequence) -> list[str]:
    """Proto-descent of a descendant, read off its neighbourhood octuple alone."""
    u = tuple(vec2(x) for x in partial_from_neighbourhood(tuple(vec2(x) for x in s)))
    base = partial_vectors(GREEK_CROSS)
    steps: list[str] = []
    while u != base:
        area = cross(_at(u, 1) + _at(u, 2), _at(u, 3) + _at(u, 4))
        if area <= 5:
            raise NotReachable("octuple does not descend from the Greek cross")
        step = _last_step(u)
        if step is None:
            raise NotReachable("no recovery test applies")
        u = _undo(u, step)
        steps.append(step)
    return canonical_descent(list(reversed(steps)))
