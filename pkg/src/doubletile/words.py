"""Words over alphabets with a reversal involution, plus free-group words.

Words over the square alphabet are plain ``str`` values over ``"RLUD"``.
Other alphabets may use any hashable letters; words over them are tuples
(or strings when every letter is a single character).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

Letter = Hashable
Word = Sequence  # str over single-character alphabets, tuple otherwise


class Alphabet:
    """A finite set of letters with an involution ``x -> x^-1``."""

    def __init__(self, reversal: Mapping[Letter, Letter]):
        rev = dict(reversal)
        for x, y in list(rev.items()):
            rev.setdefault(y, x)
        for x, y in rev.items():
            if rev[y] != x:
                raise ValueError(f"reversal is not an involution at {x!r}")
        self.reversal = rev
        self.letters = tuple(rev)
        self._table = None
        if all(isinstance(x, str) and len(x) == 1 for x in rev):
            self._table = str.maketrans(rev)
        # balance is measured per reverse pair; self-reverse letters never matter
        self._pair_index = {}
        for x in self.letters:
            y = rev[x]
            if x == y or x in self._pair_index:
                continue
            k = len(self._pair_index) // 2
            self._pair_index[x] = (k, 1)
            self._pair_index[y] = (k, -1)
        self.npairs = len(self._pair_index) // 2

    @classmethod
    def from_pairs(cls, *pairs: Iterable[Letter]) -> "Alphabet":
        mapping = {}
        for pair in pairs:
            pair = tuple(pair)
            if len(pair) == 1:
                mapping[pair[0]] = pair[0]
            else:
                x, y = pair
                mapping[x] = y
        return cls(mapping)

    def inverse(self, x: Letter) -> Letter:
        return self.reversal[x]

    def __contains__(self, x) -> bool:
        return x in self.reversal

    def __repr__(self) -> str:
        return f"Alphabet({self.reversal!r})"


SQUARE = Alphabet.from_pairs("RL", "UD")


def _rebuild(template, letters):
    if isinstance(template, str):
        return "".join(letters)
    return tuple(letters)


def reverse(w: Word, alphabet: Alphabet = SQUARE) -> Word:
    """Return ``w_k^-1 ... w_1^-1``."""
    if isinstance(w, str) and alphabet._table is not None:
        return w[::-1].translate(alphabet._table)
    rev = alphabet.reversal
    return _rebuild(w, [rev[x] for x in reversed(w)])


def _signature_steps(w: Word, alphabet: Alphabet):
    steps = []
    for x in w:
        steps.append(alphabet._pair_index.get(x))
    return steps


def prefix_signatures(w: Word, alphabet: Alphabet = SQUARE) -> list[tuple]:
    """Net letter counts of every prefix; equal entries bound a balanced subword."""
    acc = [0] * alphabet.npairs
    out = [tuple(acc)]
    for step in _signature_steps(w, alphabet):
        if step is not None:
            acc[step[0]] += step[1]
        out.append(tuple(acc))
    return out


def is_balanced(w: Word, alphabet: Alphabet = SQUARE) -> bool:
    sig = prefix_signatures(w, alphabet)
    return sig[0] == sig[-1]


def balanced_subwords(w: Word, alphabet: Alphabet = SQUARE) -> list[tuple[int, int]]:
    """All nonempty balanced subwords as ``(start, length)`` pairs."""
    seen: dict[tuple, list[int]] = {}
    out = []
    for j, s in enumerate(prefix_signatures(w, alphabet)):
        for i in seen.get(s, ()):
            out.append((i, j - i))
        seen.setdefault(s, []).append(j)
    out.sort()
    return out


def combinatorial_self_intersections(w: Word, alphabet: Alphabet = SQUARE) -> list[tuple[int, int]]:
    """Balanced subwords other than the empty word and ``w`` itself.

    A word of the form ``x x^-1`` is reported as ``[(0, 2)]``.
    """
    n = len(w)
    if n == 2 and alphabet.reversal[w[0]] == w[1]:
        return [(0, 2)]
    return [(i, k) for i, k in balanced_subwords(w, alphabet) if k != n]


def has_combinatorial_self_intersection(w: Word, alphabet: Alphabet = SQUARE) -> bool:
    n = len(w)
    if n == 2 and alphabet.reversal[w[0]] == w[1]:
        return True
    seen = {}
    for j, s in enumerate(prefix_signatures(w, alphabet)):
        if s in seen and not (seen[s] == 0 and j == n):
            return True
        seen.setdefault(s, j)
    return False


def cyclic_shift(w: Word, i: int) -> Word:
    """Move the first ``i mod |w|`` letters to the end."""
    if not w:
        return w
    i %= len(w)
    return w[i:] + w[:i]


class Substitution:
    """Letter-to-word map extended so that it commutes with reversal.

    ``mapping`` may name either letter of a reverse pair; the other one is
    sent to the reversed image.  Unmapped letters are left alone.
    """

    def __init__(self, mapping: Mapping[Letter, Word], source: Alphabet = SQUARE,
                 target: Alphabet = SQUARE):
        full = {}
        for x, img in mapping.items():
            y = source.reversal[x]
            full[x] = img
            inv = reverse(img, target)
            if y in full and full[y] != inv:
                raise ValueError(f"images of {x!r} and {y!r} are not mutually reverse")
            full[y] = inv
        self.images = full
        self.source = source
        self.target = target

    def __call__(self, w: Word) -> Word:
        parts = [self.images.get(x, x if isinstance(w, str) else (x,)) for x in w]
        if isinstance(w, str) and all(isinstance(p, str) for p in parts):
            return "".join(parts)
        out = []
        for p in parts:
            out.extend(p)
        return tuple(out)


def substitute(w: Word, mapping, source: Alphabet = SQUARE, target: Alphabet = SQUARE) -> Word:
    zeta = mapping if isinstance(mapping, Substitution) else Substitution(mapping, source, target)
    return zeta(w)


# ---------------------------------------------------------------- imaginary words

POSITIVE, NEGATIVE, MIXED, EMPTY = "Positive", "Negative", "Mixed", "Empty"


@dataclass(frozen=True)
class ImaginaryWord:
    """Element of the free group on the letters, as signed entries.

    ``(x, -1)`` is the formal inverse of ``x``; it is unrelated to the
    reversed letter ``x^-1`` of the alphabet.
    """

    entries: tuple
    alphabet: Alphabet = SQUARE

    def __post_init__(self):
        stack: list = []
        for letter, sign in self.entries:
            if sign not in (1, -1):
                raise ValueError(f"bad sign {sign!r}")
            if stack and stack[-1][0] == letter and stack[-1][1] == -sign:
                stack.pop()
            else:
                stack.append((letter, sign))
        object.__setattr__(self, "entries", tuple(stack))

    @classmethod
    def of(cls, w: Word, alphabet: Alphabet = SQUARE) -> "ImaginaryWord":
        return cls(tuple((x, 1) for x in w), alphabet)

    def __len__(self) -> int:
        return sum(sign for _, sign in self.entries)

    def __mul__(self, other: "ImaginaryWord") -> "ImaginaryWord":
        return ImaginaryWord(self.entries + other.entries, self.alphabet)

    def negate(self) -> "ImaginaryWord":
        return ImaginaryWord(tuple((x, -s) for x, s in reversed(self.entries)), self.alphabet)

    def reverse(self) -> "ImaginaryWord":
        rev = self.alphabet.reversal
        return ImaginaryWord(tuple((rev[x], s) for x, s in reversed(self.entries)), self.alphabet)

    def classify(self) -> str:
        signs = {s for _, s in self.entries}
        if not signs:
            return EMPTY
        if signs == {1}:
            return POSITIVE
        if signs == {-1}:
            return NEGATIVE
        return MIXED

    def to_word(self, template: Word = "") -> Word:
        """The ordinary word, provided every entry is positive."""
        if self.classify() not in (POSITIVE, EMPTY):
            raise ValueError(f"imaginary word is {self.classify()}, not ordinary")
        return _rebuild(template, [x for x, _ in self.entries])

    def __str__(self) -> str:
        return "".join(f"{x}" if s > 0 else f"^{x}" for x, s in self.entries) or "ε"


def _lift(w, alphabet=SQUARE) -> ImaginaryWord:
    return w if isinstance(w, ImaginaryWord) else ImaginaryWord.of(w, alphabet)


def iconcat(*words, alphabet: Alphabet = SQUARE) -> ImaginaryWord:
    out = ImaginaryWord((), alphabet)
    for w in words:
        out = out * _lift(w, alphabet)
    return out


def inegate(w, alphabet: Alphabet = SQUARE) -> ImaginaryWord:
    return _lift(w, alphabet).negate()


def ireverse(w, alphabet: Alphabet = SQUARE) -> ImaginaryWord:
    return _lift(w, alphabet).reverse()


def ilength(w, alphabet: Alphabet = SQUARE) -> int:
    return len(_lift(w, alphabet))


def classify(w, alphabet: Alphabet = SQUARE) -> str:
    return _lift(w, alphabet).classify()
