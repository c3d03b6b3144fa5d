"""Polyominoes that tile by the lattices of a Gaussian prime and its conjugate."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from sympy import isprime

from .chains import WordChain
from .descend import DescendantChain, descendant, neighbourhood_vectors
from .geom import Lattice, cells, signed_area
from .transforms import F_TAGS, canonical_descent


class WrongArea(ValueError):
    pass


class BadPair(ValueError):
    pass


def is_proper(a: int, b: int) -> bool:
    return a > 0 and b > 0 and (a * a + b * b) % 2 == 1 and isprime(a * a + b * b)


def lattices(a: int, b: int) -> tuple[Lattice, Lattice]:
    """``L(z)`` and ``L(conj z)`` for ``z = a + b i``, the latter as ``L((b,a),(-a,b))``."""
    return Lattice((a, b), (-b, a)), Lattice((b, a), (-a, b))


def is_z_good(cell_set: Iterable[tuple[int, int]], a: int, b: int) -> bool:
    """``p`` cells, pairwise incongruent modulo both lattices."""
    cs = list(cell_set)
    p = a * a + b * b
    if len(cs) != p:
        raise WrongArea(f"{len(cs)} cells, expected {p}")
    # x a + y b and x b + y a classify residues modulo L(z) and L(conj z)
    first = {(x * a + y * b) % p for x, y in cs}
    second = {(x * b + y * a) % p for x, y in cs}
    return len(first) == p and len(second) == p


def normalize(cell_set: Iterable[tuple[int, int]]) -> frozenset:
    cs = list(cell_set)
    mx = min(x for x, _ in cs)
    my = min(y for _, y in cs)
    return frozenset((x - mx, y - my) for x, y in cs)


def is_connected(cell_set) -> bool:
    cs = set(cell_set)
    if not cs:
        return False
    start = next(iter(cs))
    seen = {start}
    todo = deque([start])
    while todo:
        x, y = todo.popleft()
        for n in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if n in cs and n not in seen:
                seen.add(n)
                todo.append(n)
    return len(seen) == len(cs)


@dataclass(frozen=True)
class GridGraph:
    isolated: tuple
    cycles: tuple  # each cycle as a tuple of cells in traversal order


def grid_graph(a: int, b: int) -> GridGraph:
    """Cells of the ``(a+b)`` square joined when they differ by ``(+-a, +-b)`` or ``(+-b, +-a)``."""
    n = a + b
    steps = {(sx * dx, sy * dy) for dx, dy in ((a, b), (b, a)) for sx in (1, -1) for sy in (1, -1)}
    nodes = [(x, y) for y in range(n) for x in range(n)]
    adj = {c: sorted((c[0] + dx, c[1] + dy) for dx, dy in steps
                     if 0 <= c[0] + dx < n and 0 <= c[1] + dy < n) for c in nodes}
    isolated = tuple(c for c in nodes if not adj[c])
    seen = set(isolated)
    cycles = []
    for c in nodes:
        if c in seen:
            continue
        order = [c]
        seen.add(c)
        prev, cur = None, c
        while True:
            nxt = [m for m in adj[cur] if m != prev and (m not in seen or m == c)]
            if len(adj[cur]) != 2:
                raise AssertionError(f"cell {cur} has degree {len(adj[cur])}")
            step = next((m for m in nxt if m not in seen), None)
            if step is None:
                break
            order.append(step)
            seen.add(step)
            prev, cur = cur, step
        if len(order) % 2:
            raise AssertionError("odd cycle in the grid graph")
        cycles.append(tuple(order))
    return GridGraph(isolated, tuple(cycles))


def mebane_construction(a: int, b: int) -> list[frozenset]:
    """Connected unions of the isolated cells with one alternate half of every cycle."""
    g = grid_graph(a, b)
    halves = [(c[0::2], c[1::2]) for c in g.cycles]
    out = set()
    for choice in product((0, 1), repeat=len(halves)):
        shape = set(g.isolated)
        for pick, pair in zip(choice, halves):
            shape.update(pair[pick])
        if is_connected(shape):
            out.add(normalize(shape))
    return sorted(out, key=sorted)


@dataclass(frozen=True)
class CloverPlan:
    steps: tuple  # applied from the cross: entries fOdd, fEven, g*
    k: int


def clover_plan(a: int, b: int) -> CloverPlan:
    if a > b:
        a, b = b, a
    if not is_proper(a, b):
        raise BadPair(f"({a},{b}) is not a proper Gaussian prime")
    backwards = []
    while (a, b) != (1, 2):
        if 3 * a < b:
            backwards.append("fOdd")
            a, b = a, b - 2 * a
        elif b < 2 * a:
            backwards.append("fEven")
            a, b = 2 * a - b, a
        elif 2 * a < b < 3 * a:
            backwards.append("g*")
            a, b = b - 2 * a, a
        else:
            raise BadPair(f"no rule applies at ({a},{b})")
    steps = tuple(reversed(backwards))
    return CloverPlan(steps, steps.count("g*"))


def clovers_for(a: int, b: int) -> list[DescendantChain]:
    plan = clover_plan(a, b)
    out = []
    for choice in product(("go", "ge"), repeat=plan.k):
        picks = iter(choice)
        tags: list[str] = []
        for step in plan.steps:
            if step == "fOdd":
                tags += ["f1", "f3"]
            elif step == "fEven":
                tags += ["f2", "f4"]
            else:
                tags.append(next(picks))
        out.append(descendant(tags))
    return out


def chain_cells(chain: WordChain) -> frozenset:
    w = chain.concat()
    if signed_area(w) <= 0:
        raise ValueError("chain is not counterclockwise")
    return normalize(cells(w))


def star(x: int, y: int) -> tuple:
    return ((y, x), (x, y), (-x, y), (-y, x), (-y, -x), (-x, -y), (x, -y), (y, -x))


# ---------------------------------------------------------------------- symmetry

_QUARTER = str.maketrans("RULD", "ULDR")
_MIRROR = str.maketrans("UD", "DU")


def is_clover_geometric(chain: WordChain) -> bool:
    """Invariant, up to cyclic shift and reversal, under all eight square symmetries."""
    shifts = {chain.shifted(k).parts for k in range(8)}
    for r in range(4):
        for mirror in (False, True):
            parts = chain.parts
            for _ in range(r):
                parts = tuple(p.translate(_QUARTER) for p in parts)
            if mirror:
                parts = tuple(p.translate(_MIRROR) for p in parts)
                parts = tuple(chain.rev(p) for p in reversed(parts))
            if parts not in shifts:
                return False
    return True


def is_clover_syntactic(descent: Sequence[str]) -> bool:
    """Can the descent be regrouped into fOdd, fEven, go and ge steps only?"""
    runs: list[list[str]] = []
    for t in canonical_descent(descent):
        if t not in F_TAGS:
            runs.append([])
        elif runs and runs[-1] and int(runs[-1][0][1]) % 2 == int(t[1]) % 2:
            runs[-1].append(t)
        else:
            runs.append([t])
    for run in runs:
        if run and run.count(min(run)) * 2 != len(run):
            return False
    return True


def is_clover(d: DescendantChain) -> bool:
    syn = is_clover_syntactic(d.descent)
    geo = is_clover_geometric(d.chain)
    if syn != geo:
        raise AssertionError(f"clover checks disagree on {d.descent}")
    return syn


def clover_octuple_matches(d: DescendantChain, a: int, b: int, k: int) -> bool:
    sign = -1 if k % 2 else 1
    s = tuple((sign * v.x, sign * v.y) for v in neighbourhood_vectors(d.chain))
    return s == star(a, b)
