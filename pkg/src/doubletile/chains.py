"""Eight-part word chains, the two double-chain systems, and template detectors."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Sequence

from .words import SQUARE, Alphabet, balanced_subwords, is_balanced, reverse, substitute


class IndexConvention(ValueError):
    pass


class NotDoubleChain(ValueError):
    pass


class PatternMismatch(ValueError):
    pass


class NotNonInterleaved(ValueError):
    pass


class CaseMismatch(ValueError):
    pass


INTERLEAVED, NON_INTERLEAVED = "interleaved", "non-interleaved"


@dataclass(frozen=True)
class WordChain:
    """Cyclic sequence ``U1:...:U8``; parts are indexed from 1, modulo 8."""

    parts: tuple
    alphabet: Alphabet = SQUARE

    def __post_init__(self):
        parts = tuple(self.parts)
        if len(parts) != 8:
            raise ValueError(f"a chain has 8 parts, got {len(parts)}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "WordChain":
        pieces = text.strip().split(":")
        if len(pieces) != 8:
            raise ValueError(f"expected 8 ':'-separated parts in {text!r}")
        for p in pieces:
            if p != "-" and (not p or set(p) - set("RLUD")):
                raise ValueError(f"bad part {p!r} in {text!r}")
        return cls(tuple("" if p == "-" else p for p in pieces))

    def __str__(self) -> str:
        return ":".join(p if p else "-" for p in self.parts)

    def __getitem__(self, i: int):
        return self.parts[(i - 1) % 8]

    def rev(self, w):
        return reverse(w, self.alphabet)

    def join(self, i: int, j: int):
        """Concatenate ``U_i ... U_j`` for ``i <= j`` with cyclic indexing."""
        pieces = [self[k] for k in range(i, j + 1)]
        if isinstance(self.parts[0], str):
            return "".join(pieces)
        return tuple(x for p in pieces for x in p)

    def concat(self):
        return self.join(1, 8)

    def __len__(self) -> int:
        return sum(len(p) for p in self.parts)

    def shifted(self, k: int) -> "WordChain":
        """The chain ``U_{1+k} : ... : U_{8+k}``."""
        return WordChain(tuple(self[i + k] for i in range(1, 9)), self.alphabet)

    def substituted(self, mapping) -> "WordChain":
        return WordChain(tuple(substitute(p, mapping) for p in self.parts), self.alphabet)

    def is_chain(self) -> bool:
        return is_balanced(self.concat(), self.alphabet)


class TypeQuad(NamedTuple):
    a1: int
    a2: int
    a3: int
    a4: int

    def at(self, i: int) -> int:
        return self[(i - 1) % 4]


def slice_(chain: WordChain, i: int, j: int):
    """``U_{i:j}``; a pair ``1 <= j < i <= 8`` wraps around to ``U_{i:(j+8)}``."""
    if i <= j:
        return chain.join(i, j)
    if 1 <= j < i <= 8:
        return chain.join(i, j + 8)
    raise IndexConvention(f"slice ({i},{j}) is outside the wraparound convention")


def is_interleaved_double_chain(c: WordChain) -> bool:
    return all(c.join(i, i + 1) == c.rev(c.join(i + 4, i + 5)) for i in range(1, 5))


def is_non_interleaved_double_chain(c: WordChain) -> bool:
    for i in (1, 3):
        if c[i] != c.rev(c[i + 4]):
            return False
        if c.join(i + 1, i + 3) != c.rev(c.join(i + 5, i + 7)):
            return False
    return True


def type_of(c: WordChain) -> TypeQuad:
    if not (is_interleaved_double_chain(c) or is_non_interleaved_double_chain(c)):
        raise NotDoubleChain(str(c))
    return TypeQuad(*(len(c[i]) for i in range(1, 5)))


def lengths(c: WordChain) -> TypeQuad:
    """Part lengths ``|U1|..|U4|`` without validating the chain."""
    return TypeQuad(*(len(c.parts[i]) for i in range(4)))


# ------------------------------------------------------------ tile factorizations

class TileFactorization(NamedTuple):
    offset: int
    len_a: int
    len_b: int
    quadruple: frozenset

    def sides(self, w: str) -> tuple[str, str]:
        r = w[self.offset:] + w[:self.offset]
        return r[:self.len_a], r[self.len_a:self.len_a + self.len_b]


def theta_tile_factorizations(w: str, alphabet: Alphabet = SQUARE) -> list[TileFactorization]:
    """All ways to read the cyclic word as ``A B A^-1 B^-1``, one per division-point set."""
    n = len(w)
    if n == 0 or n % 2:
        return []
    half = n // 2
    ww = w + w
    m = 2 * n
    rr = reverse(ww, alphabet)  # rev(ww[i:j]) == rr[m - j:m - i]
    found: dict[frozenset, TileFactorization] = {}
    for o in range(n):
        for a in range(0, half + 1):
            if ww[o + half:o + half + a] != rr[m - o - a:m - o]:
                continue
            if ww[o + half + a:o + n] != rr[m - o - half:m - o - a]:
                continue
            q = frozenset({o, (o + a) % n, (o + half) % n, (o + half + a) % n})
            if q not in found:
                found[q] = TileFactorization(o, a, half - a, q)
    return sorted(found.values(), key=lambda f: (sorted(f.quadruple), f.offset))


def _cut(w: str, start: int, lens: Sequence[int]) -> tuple:
    n = len(w)
    ww = w + w + w
    out = []
    pos = start % n
    for k in lens:
        out.append(ww[pos:pos + k])
        pos += k
    return tuple(out)


def double_chain_candidates(w: str, q1: TileFactorization, q2: TileFactorization):
    """Every chain whose division points are the union of two quadruples.

    Yields ``(start, chain, kind)``; division points alternate between the
    two quadruples in the interleaved case and come in the order
    ``P P Q P P Q ...``-style blocks in the non-interleaved case.
    """
    n = len(w)
    p = sorted(q1.quadruple)
    q = sorted(q2.quadruple)
    if len(p) != 4 or len(q) != 4:
        return
    seen = set()
    for first, second in ((p, q), (q, p)):
        for rp, rq in product(range(4), range(4)):
            ps = first[rp:] + first[:rp]
            qs = second[rq:] + second[:rq]
            orders = {
                INTERLEAVED: [ps[0], qs[0], ps[1], qs[1], ps[2], qs[2], ps[3], qs[3]],
                NON_INTERLEAVED: [ps[0], ps[1], qs[0], qs[1], ps[2], ps[3], qs[2], qs[3]],
            }
            for kind, pts in orders.items():
                lens = [(pts[(k + 1) % 8] - pts[k]) % n for k in range(8)]
                if sum(lens) != n:
                    continue
                key = (pts[0], tuple(lens), kind)
                if key in seen:
                    continue
                seen.add(key)
                yield pts[0], WordChain(_cut(w, pts[0], lens)), kind


def build_double_chain(w: str, q1: TileFactorization, q2: TileFactorization):
    """Chain for two distinct tilings; prefers (I) and the lowest starting offset."""
    if q1.quadruple == q2.quadruple:
        raise ValueError("the two factorizations name the same tiling")
    best = None
    for start, chain, kind in double_chain_candidates(w, q1, q2):
        ok = (is_interleaved_double_chain(chain) if kind == INTERLEAVED
              else is_non_interleaved_double_chain(chain))
        if not ok:
            continue
        key = (kind != INTERLEAVED, start, [len(x) for x in chain.parts])
        if best is None or key < best[0]:
            best = (key, start, chain, kind)
    if best is None:
        raise PatternMismatch("division points fit neither double-chain pattern")
    return best[2], best[3], best[1]


# ------------------------------------------------------------- template detectors

THETA_ALPHABET = Alphabet.from_pairs("Aa", "Bb", "Cc")


def detect_theta_cube(c: WordChain) -> bool:
    """Is a non-interleaved chain an instance of ``A B C B^-1 A^-1 B C^-1 B^-1``?"""
    if not is_non_interleaved_double_chain(c):
        raise NotNonInterleaved(str(c))
    t = lengths(c)
    if t.a2 != t.a4 or t.a2 == 0:
        return False
    template = "ABCbaBcb"
    image = substitute(template, {"A": c[1], "B": c[2], "C": c[3]}, THETA_ALPHABET, c.alphabet)
    return image == c.concat()


class SelfIntersectionEvidence(NamedTuple):
    word: object
    start: int  # offset within the chain concatenation U_{1:8}
    length: int


def noninterleaved_witness(c: WordChain) -> SelfIntersectionEvidence:
    """Balanced proper subword forced in a non-interleaved chain with ``a2 != a4``."""
    if not is_non_interleaved_double_chain(c):
        raise NotNonInterleaved(str(c))
    t = lengths(c)
    if t.a2 == t.a4:
        raise CaseMismatch("a2 = a4: the chain is a cube instance instead")
    if t.a1 + t.a3 == 0 or t.a2 + t.a4 == 0:
        raise CaseMismatch("degenerate type")
    k = 0 if t.a2 > t.a4 else 2
    s = c.shifted(k)
    a4 = len(s[4])
    x = s[2][a4:]
    y = s[6][a4:]
    witness = c.rev(y) + c.rev(x)
    local = len(s[1]) + len(s[2]) + len(s[3]) - len(y)
    offset = sum(len(c[i]) for i in range(1, k + 1))
    start = (local + offset) % len(c)
    return SelfIntersectionEvidence(witness, start, len(witness))


def find_stable_self_intersection(c: WordChain):
    """First nonempty balanced subword of some ``U_{i:(i+3)}``, as ``(i, start, length)``."""
    for i in range(1, 9):
        found = balanced_subwords(c.join(i, i + 3), c.alphabet)
        if found:
            start, length = found[0]
            return i, start, length
    return None


THETA_LOOP = WordChain(("ABC", "bA", "B", "cb", "aBc", "ba", "B", "Cb"), THETA_ALPHABET)


def theta_loop(a: str, b: str, c: str, alphabet: Alphabet = SQUARE) -> WordChain:
    """The loop template with ``A, B, C`` substituted; ``B`` must be nonempty."""
    if not b:
        raise ValueError("B must be nonempty")
    mapping = {"A": a, "B": b, "C": c}
    return WordChain(tuple(substitute(p, mapping, THETA_ALPHABET, alphabet) for p in THETA_LOOP.parts),
                     alphabet)
