"""Length-changing transforms of interleaved double chains and double-tile decomposition.

Tags used throughout:

``f1``..``f4``
    the four f-transforms; ``f1``/``f3`` commute, as do ``f2``/``f4``
``fOdd``, ``fEven``
    the commuting pairs applied together
``gOdd``, ``gEven``
    the self-inverse g-transforms
``go``, ``ge``
    the composite lifts ``gOdd . fEven`` and ``gEven . fOdd``
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .chains import (
    INTERLEAVED, NotDoubleChain, PatternMismatch, WordChain, build_double_chain,
    is_interleaved_double_chain, lengths, theta_tile_factorizations,
)
from .geom import NotClosed, signed_area, span
from .words import POSITIVE, EMPTY, ImaginaryWord, cyclic_shift, has_combinatorial_self_intersection

F_TAGS = ("f1", "f2", "f3", "f4")
MAIN_TAGS = F_TAGS + ("go", "ge")
PAIR = {"fOdd": ("f1", "f3"), "fEven": ("f2", "f4")}
PARTNER = {1: 3, 3: 1, 2: 4, 4: 2}


class NotReducible(ValueError):
    pass


class NotApplicable(ValueError):
    pass


class InternalNonPositive(AssertionError):
    pass


class IrregularG(ValueError):
    pass


class NotSimple(ValueError):
    pass


class NotDoubleTile(Exception):
    """Raised by :func:`decompose`; ``reason`` says which check failed."""

    REASONS = ("NoFactorization", "SingleTiling", "NonInterleavedOnly", "SelfIntersectionImplied")

    def __init__(self, reason: str, detail: str = ""):
        assert reason in self.REASONS
        self.reason = reason
        self.detail = detail
        super().__init__(f"{reason}: {detail}" if detail else reason)


GREEK_CROSS = WordChain(("R", "UR", "U", "LU", "L", "DL", "D", "RD"))


def _require_interleaved(u: WordChain):
    if not is_interleaved_double_chain(u):
        raise NotDoubleChain(f"not an interleaved double chain: {u}")


def _idx(i: int) -> int:
    return (i - 1) % 4 + 1


# -------------------------------------------------------------------- f-transforms

def f_lift(u: WordChain, i: int, check: bool = True) -> WordChain:
    if check:
        _require_interleaved(u)
    parts = list(u.parts)
    for j in (i, i + 4):
        parts[(j - 1) % 8] = u.rev(u.join(j + 3, j + 5))
    return WordChain(tuple(parts), u.alphabet)


def f_reduce(v: WordChain, i: int, check: bool = True) -> WordChain:
    """Inverse of :func:`f_lift`; needs ``b_i >= b_(i-1) + b_(i+1)``."""
    if check:
        _require_interleaved(v)
    b = lengths(v)
    if b.at(i) < b.at(i - 1) + b.at(i + 1):
        raise NotReducible(f"f{_idx(i)}-reduction needs b_i >= b_(i-1)+b_(i+1), type {tuple(b)}")
    parts = list(v.parts)
    for k in (i, i + 4):
        whole = v[k]
        pre, suf = len(v[k + 5]), len(v[k + 3])
        if whole[:pre] != v.rev(v[k + 5]) or whole[len(whole) - suf:] != v.rev(v[k + 3]):
            raise NotDoubleChain(f"part {k} does not carry the expected prefix and suffix")
        core = whole[pre:len(whole) - suf]
        parts[(k + 4 - 1) % 8] = v.rev(core)
    return WordChain(tuple(parts), v.alphabet)


def is_false_f_reduction(v: WordChain, i: int) -> bool:
    b = lengths(v)
    return b.at(i - 1) == 0 and b.at(i + 1) == 0


# -------------------------------------------------------------------- g-transforms

def _parity_indices(parity: str) -> tuple[int, ...]:
    if parity in ("odd", "Odd", "o"):
        return (1, 3, 5, 7)
    if parity in ("even", "Even", "e"):
        return (2, 4, 6, 8)
    raise ValueError(f"unknown parity {parity!r}")


def g_transform(v: WordChain, parity: str, check: bool = True) -> WordChain:
    """The self-inverse g-transform of the given parity.

    Parts of the chosen parity are rebuilt through free-group words, which
    must come out positive.
    """
    if check:
        _require_interleaved(v)
    b = lengths(v)
    chosen = _parity_indices(parity)
    for i in chosen[:2]:
        if b.at(i) > b.at(i - 1) + b.at(i + 1):
            raise NotApplicable(f"g-transform needs b_i <= b_(i-1)+b_(i+1) at i={i}, type {tuple(b)}")
    alpha = v.alphabet
    parts = []
    for i in range(1, 9):
        if i in chosen:
            w = (ImaginaryWord.of(v[i + 5], alpha)
                 * ImaginaryWord.of(v.rev(v[i]), alpha).negate()
                 * ImaginaryWord.of(v[i + 3], alpha))
            if w.classify() not in (POSITIVE, EMPTY):
                raise InternalNonPositive(f"part {i} came out {w.classify()}")
            parts.append(w.to_word(v[i]))
        else:
            parts.append(v.rev(v[i]))
    return WordChain(tuple(parts), alpha)


def gstar_lift(u: WordChain, parity: str, check: bool = True) -> WordChain:
    """``gOdd . fEven`` (parity odd) or ``gEven . fOdd``, by the direct slice rule."""
    if check:
        _require_interleaved(u)
    chosen = _parity_indices(parity)
    parts = []
    for i in range(1, 9):
        if i in chosen:
            parts.append(u.rev(u.join(i - 2, i + 2)))
        else:
            parts.append(u.join(i + 3, i + 5))
    return WordChain(tuple(parts), u.alphabet)


def gstar_composed(u: WordChain, parity: str) -> WordChain:
    """Same as :func:`gstar_lift`, computed as the two-step composition."""
    if parity in ("odd", "Odd", "o"):
        return g_transform(f_lift(f_lift(u, 2), 4), "odd")
    return g_transform(f_lift(f_lift(u, 1), 3), "even")


def lift(u: WordChain, tag: str, check: bool = True) -> WordChain:
    if tag in F_TAGS:
        return f_lift(u, int(tag[1]), check)
    if tag in PAIR:
        a, b = PAIR[tag]
        return f_lift(f_lift(u, int(a[1]), check), int(b[1]), False)
    if tag == "go":
        return gstar_lift(u, "odd", check)
    if tag == "ge":
        return gstar_lift(u, "even", check)
    if tag == "gOdd":
        return g_transform(u, "odd", check)
    if tag == "gEven":
        return g_transform(u, "even", check)
    raise ValueError(f"unknown transform tag {tag!r}")


def apply_descent(tags: Iterable[str], start: WordChain = GREEK_CROSS) -> WordChain:
    u = start
    for t in tags:
        u = lift(u, t, check=False)
    return u


def parse_descent(text: str) -> list[str]:
    tags = [t.strip() for t in text.split(",") if t.strip()]
    for t in tags:
        if t not in MAIN_TAGS:
            raise ValueError(f"unknown descent tag {t!r}")
    return tags


def format_descent(tags: Sequence[str]) -> str:
    return ",".join(tags)


def canonical_descent(tags: Sequence[str]) -> list[str]:
    """Sort every maximal run of mutually commuting f-transforms."""
    out: list[str] = []
    run: list[str] = []
    for t in list(tags) + [None]:
        if run and (t is None or t not in F_TAGS or int(t[1]) % 2 != int(run[0][1]) % 2):
            out.extend(sorted(run))
            run = []
        if t is None:
            break
        if t in F_TAGS:
            run.append(t)
        else:
            out.append(t)
    return out


# ---------------------------------------------------------------------- reduction

@dataclass(frozen=True)
class Root:
    x: object
    y: object
    shift: int  # 0: X:-:Y:-:... ; 1: -:X:-:Y:...

    def chain(self, rev) -> WordChain:
        parts = (self.x, "", self.y, "", rev(self.x), "", rev(self.y), "")
        if self.shift:
            parts = parts[-1:] + parts[:-1]
        return WordChain(parts)


@dataclass(frozen=True)
class Loop:
    chain: WordChain


@dataclass
class ReductionLog:
    steps: list = field(default_factory=list)  # reduction tags, first applied first
    base: object = None

    def lifts(self) -> list[str]:
        return list(reversed(self.steps))


def _root_of(u: WordChain) -> Root:
    a = lengths(u)
    if a.a2 == 0 and a.a4 == 0:
        return Root(u[1], u[3], 0)
    return Root(u[2], u[4], 1)


def reduce_to_base(u: WordChain) -> ReductionLog:
    """Reduce to a root or a genuine loop.

    Roots are detected before loops; a loop with an empty part is carried
    to a root by one more f-reduction.  Admissible f-reductions are taken
    lowest index first, together with their commuting partner whenever
    that one is admissible too.
    """
    _require_interleaved(u)
    log = ReductionLog()
    while True:
        a = lengths(u)
        if (a.a1 == 0 and a.a3 == 0) or (a.a2 == 0 and a.a4 == 0):
            log.base = _root_of(u)
            return log
        if a.a1 + a.a3 == a.a2 + a.a4:
            zeros = [j for j in range(1, 5) if a.at(j) == 0]
            if not zeros:
                log.base = Loop(u)
                return log
            k = _idx(zeros[0] + 2)
            u = f_reduce(u, k, check=False)
            log.steps.append(f"f{k}")
            continue
        admissible = [i for i in range(1, 5) if a.at(i) >= a.at(i - 1) + a.at(i + 1)]
        if admissible:
            i = admissible[0]
            u = f_reduce(u, i, check=False)
            if PARTNER[i] in admissible:
                u = f_reduce(u, PARTNER[i], check=False)
                log.steps.append("fOdd" if i % 2 else "fEven")
            else:
                log.steps.append(f"f{i}")
            continue
        if a.a1 + a.a3 > a.a2 + a.a4:
            u = g_transform(u, "odd", check=False)
            log.steps.append("gOdd")
        else:
            u = g_transform(u, "even", check=False)
            log.steps.append("gEven")


def repackage_descent(steps: Sequence[str]) -> list[str]:
    """Turn reduction steps into a canonical lift sequence over f1..f4, go, ge.

    Every g-lift must directly follow the opposite f-pair, which it absorbs.
    """
    packed: list[str] = []
    for t in reversed(list(steps)):
        if t == "gOdd":
            if not packed or packed[-1] != "fEven":
                raise IrregularG("gOdd lift not preceded by an fEven lift")
            packed[-1] = "go"
        elif t == "gEven":
            if not packed or packed[-1] != "fOdd":
                raise IrregularG("gEven lift not preceded by an fOdd lift")
            packed[-1] = "ge"
        else:
            packed.append(t)
    out: list[str] = []
    for t in packed:
        out.extend(PAIR.get(t, (t,)))
    return canonical_descent(out)


SHIFT_TAG = {"f1": "f4", "f2": "f1", "f3": "f2", "f4": "f3", "go": "ge", "ge": "go"}
# reading the chain backwards
MIRROR_TAG = {"f1": "f4", "f2": "f3", "f3": "f2", "f4": "f1", "go": "ge", "ge": "go"}


def descent_orbit(tags: Sequence[str]) -> set[tuple]:
    """Canonical descents naming the same tile under chain shifts and reversal."""
    out = set()
    cur = list(tags)
    for _ in range(4):
        cur = [SHIFT_TAG[t] for t in cur]
        out.add(tuple(canonical_descent(cur)))
        out.add(tuple(canonical_descent([MIRROR_TAG[t] for t in cur])))
    return out


# ------------------------------------------------------------------ decomposition

@dataclass(frozen=True)
class DoubleTileCertificate:
    """``word`` rotated left by ``shift`` is the concatenation of
    ``descent(cross)`` with R, U replaced by ``root_x``, ``root_y``."""

    root_x: str
    root_y: str
    descent: tuple
    shift: int
    word: str

    def chain(self) -> WordChain:
        return apply_descent(self.descent).substituted({"R": self.root_x, "U": self.root_y})

    def replay(self) -> str:
        return cyclic_shift(self.chain().concat(), -self.shift)

    def to_json(self) -> str:
        return json.dumps({
            "format": 1,
            "root_x": self.root_x,
            "root_y": self.root_y,
            "descent": format_descent(self.descent),
            "shift": self.shift,
            "word": self.word,
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "DoubleTileCertificate":
        d = json.loads(text)
        if d.get("format") != 1:
            raise ValueError("unsupported certificate format")
        return cls(d["root_x"], d["root_y"], tuple(parse_descent(d["descent"])),
                   int(d["shift"]), d["word"])


def certify_chain(u: WordChain):
    """Root words, stripped descent, and chain shift for an interleaved chain.

    Returns ``(x, y, descent, k)`` with ``u.shifted(k) == descent(cross)[R->x, U->y]``.
    """
    log = reduce_to_base(u)
    if isinstance(log.base, Loop):
        raise NotDoubleTile("SelfIntersectionImplied", "reduction ends at a genuine loop")
    try:
        lifts = repackage_descent(log.steps)
    except IrregularG as e:
        raise NotDoubleTile("SelfIntersectionImplied", str(e)) from e
    root = log.base
    k = 0
    if root.shift:
        lifts = canonical_descent([SHIFT_TAG[t] for t in lifts])
        k = 1
    x, y = root.x, root.y
    if lifts and lifts[0] == "ge":
        # the even composite lift of a root equals fEven of its half-turn
        lifts = canonical_descent(["f2", "f4"] + lifts[1:])
        x, y = u.rev(x), u.rev(y)
    run = []
    for t in lifts:
        if t not in ("f2", "f4"):
            break
        run.append(t)
    if "f2" not in run or "f4" not in run:
        raise NotDoubleTile("SelfIntersectionImplied", "descent from the root does not open with fEven")
    rest = list(lifts)
    rest.remove("f2")
    rest.remove("f4")
    if not x or not y:
        raise NotDoubleTile("SelfIntersectionImplied", "empty root word")
    return x, y, canonical_descent(rest), k


def decompose(w: str) -> DoubleTileCertificate:
    """Certify a boundary word as a double tile, or raise :class:`NotDoubleTile`."""
    if span(w) != (0, 0):
        raise NotClosed(f"word {w!r} is not closed")
    if not w or has_combinatorial_self_intersection(w):
        raise NotSimple(f"word {w!r} is not a simple closed path")
    if signed_area(w) < 0:
        raise ValueError("boundary word must run counterclockwise")
    facts = theta_tile_factorizations(w)
    if not facts:
        raise NotDoubleTile("NoFactorization")
    if len(facts) == 1:
        raise NotDoubleTile("SingleTiling")
    saw_interleaved = False
    failure = None
    for i in range(len(facts)):
        for j in range(i + 1, len(facts)):
            try:
                chain, kind, start = build_double_chain(w, facts[i], facts[j])
            except PatternMismatch:
                continue
            if kind != INTERLEAVED:
                continue
            a = lengths(chain)
            if a.a1 + a.a3 == 0 or a.a2 + a.a4 == 0:
                continue
            saw_interleaved = True
            try:
                x, y, descent, k = certify_chain(chain)
            except NotDoubleTile as e:
                failure = e
                continue
            if has_combinatorial_self_intersection(x + y + chain.rev(x) + chain.rev(y)):
                failure = NotDoubleTile("SelfIntersectionImplied", "root word is not simple")
                continue
            shift = (start + sum(len(chain[m]) for m in range(1, k + 1))) % len(w)
            cert = DoubleTileCertificate(x, y, tuple(descent), shift, w)
            if cert.chain() != chain.shifted(k) or cert.replay() != w:
                raise AssertionError("certificate does not replay to the input")
            return cert
    if not saw_interleaved:
        raise NotDoubleTile("NonInterleavedOnly")
    raise failure or NotDoubleTile("SelfIntersectionImplied")
