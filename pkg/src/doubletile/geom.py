"""Exact integer geometry of grid paths over the square alphabet."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .words import has_combinatorial_self_intersection, reverse

STEP = {"R": (1, 0), "L": (-1, 0), "U": (0, 1), "D": (0, -1)}
LETTER_ORDER = {"R": 0, "U": 1, "L": 2, "D": 3}

INSIDE, BOUNDARY, OUTSIDE = "Inside", "Boundary", "Outside"


class NotClosed(ValueError):
    pass


class AreaMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Vec2:
    x: int
    y: int

    def __eq__(self, o):
        try:
            return len(o) == 2 and self.x == o[0] and self.y == o[1]
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y))

    def __lt__(self, o):
        return (self.x, self.y) < tuple(o)

    def __add__(self, o):
        return Vec2(self.x + o[0], self.y + o[1])

    def __sub__(self, o):
        return Vec2(self.x - o[0], self.y - o[1])

    def __neg__(self):
        return Vec2(-self.x, -self.y)

    def __mul__(self, k: int):
        return Vec2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __getitem__(self, i):
        return (self.x, self.y)[i]

    def __iter__(self):
        yield self.x
        yield self.y

    def __len__(self):
        return 2

    def __repr__(self):
        return f"({self.x},{self.y})"


def vec(v) -> Vec2:
    return v if isinstance(v, Vec2) else Vec2(v[0], v[1])


def cross(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class Lattice:
    g1: Vec2
    g2: Vec2

    def __post_init__(self):
        object.__setattr__(self, "g1", vec(self.g1))
        object.__setattr__(self, "g2", vec(self.g2))

    @property
    def det(self) -> int:
        return cross(self.g1, self.g2)

    def contains(self, v) -> bool:
        d = self.det
        if d == 0:
            raise ValueError("degenerate lattice")
        return cross(v, self.g2) % d == 0 and cross(self.g1, v) % d == 0

    def same_as(self, other: "Lattice") -> bool:
        return (abs(self.det) == abs(other.det) and other.contains(self.g1)
                and other.contains(self.g2))


def span(w: str) -> Vec2:
    return Vec2(w.count("R") - w.count("L"), w.count("U") - w.count("D"))


def vertices(w: str, start=(0, 0)) -> list[tuple[int, int]]:
    x, y = start
    out = [(x, y)]
    for c in w:
        dx, dy = STEP[c]
        x += dx
        y += dy
        out.append((x, y))
    return out


@dataclass(frozen=True)
class LatticePath:
    start: Vec2
    word: str

    @property
    def vertices(self) -> list[tuple[int, int]]:
        return vertices(self.word, self.start)

    @property
    def closed(self) -> bool:
        return span(self.word) == Vec2(0, 0)


def signed_area(w: str) -> int:
    """Signed enclosed area; positive for counterclockwise paths."""
    if span(w) != (0, 0):
        raise NotClosed(f"word {w!r} is not closed")
    area = 0
    x = 0
    for c in w:
        if c == "R":
            x += 1
        elif c == "L":
            x -= 1
        elif c == "U":
            area += x
        else:
            area -= x
    return area


def is_simple(w: str) -> bool:
    """Closed, nonempty, and visits no vertex twice (the start excepted)."""
    if not w or span(w) != (0, 0):
        return False
    return not has_combinatorial_self_intersection(w)


def _doubled(p) -> tuple[int, int]:
    out = []
    for c in p:
        d = Fraction(c) * 2
        if d.denominator != 1:
            raise ValueError(f"coordinate {c!r} is not on the half-integer grid")
        out.append(int(d))
    return out[0], out[1]


def point_in_polygon(p, w: str, start=(0, 0)) -> str:
    """Classify a point with integer or half-integer coordinates."""
    if span(w) != (0, 0):
        raise NotClosed(f"word {w!r} is not closed")
    px, py = _doubled(p)
    pts = [(2 * x, 2 * y) for x, y in vertices(w, start)]
    wind = 0
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if min(x0, x1) <= px <= max(x0, x1) and min(y0, y1) <= py <= max(y0, y1):
            return BOUNDARY
        # crossing number along a ray towards +x, counted with orientation
        if x0 == x1 and x0 > px:
            if y0 <= py < y1:
                wind += 1
            elif y1 <= py < y0:
                wind -= 1
    return INSIDE if wind else OUTSIDE


def cells(w: str, start=(0, 0)) -> list[tuple[int, int]]:
    """Unit cells (by lower-left corner) enclosed by a simple closed path.

    Uses a column sweep: each upward/downward edge toggles the cells to its left.
    """
    if span(w) != (0, 0):
        raise NotClosed(f"word {w!r} is not closed")
    x, y = start
    rows: dict[int, list[int]] = {}
    for c in w:
        dx, dy = STEP[c]
        if dy:
            ry = y if dy > 0 else y - 1
            rows.setdefault(ry, []).append(x)
        x += dx
        y += dy
    out = []
    for ry in sorted(rows):
        xs = sorted(rows[ry])
        for a, b in zip(xs[::2], xs[1::2]):
            out.extend((cx, ry) for cx in range(a, b))
    return out


def diameter(w: str) -> int:
    pts = vertices(w)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return max(max(xs) - min(xs), max(ys) - min(ys))


def tiling_cover_check(w: str, lattice: Lattice, radius: int) -> bool:
    """Do the lattice translates of the polygon cover a window exactly once?

    Every cell centre within ``radius`` of the start (in the max norm) must
    lie in the interior of exactly one translate.
    """
    a = signed_area(w)
    if abs(a) != abs(lattice.det) or a == 0:
        raise AreaMismatch(f"area {abs(a)} vs lattice covolume {abs(lattice.det)}")
    if radius < 2 * diameter(w):
        raise ValueError(f"radius {radius} is below twice the diameter {diameter(w)}")
    inside = cells(w)
    for qx in range(-radius, radius):
        for qy in range(-radius, radius):
            hits = 0
            for cx, cy in inside:
                if lattice.contains((qx - cx, qy - cy)):
                    hits += 1
            if hits != 1:
                return False
    return True


def canonical(w: str) -> str:
    """Canonical boundary word of the polygon traced by ``w``.

    The polygon is traversed counterclockwise starting from its lowest,
    then leftmost, vertex.
    """
    if signed_area(w) < 0:
        w = reverse(w)
    pts = vertices(w)[:-1]
    best = min(range(len(pts)), key=lambda i: (pts[i][1], pts[i][0]))
    candidates = [i for i in range(len(pts)) if pts[i] == pts[best]]
    rots = [w[i:] + w[:i] for i in candidates]
    return min(rots, key=lambda r: [LETTER_ORDER[c] for c in r])


def perimeter(w: str) -> int:
    return len(w)


def bounding_box(points: Iterable[tuple[int, int]]):
    pts = list(points)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return min(xs), min(ys), max(xs), max(ys)
