"""Deformations, double-tile verification, the exhaustive oracle, and rendering."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .chains import (
    INTERLEAVED, PatternMismatch, TileFactorization, build_double_chain, lengths,
    theta_tile_factorizations,
)
from .descend import DescendantChain, enumerate_descendants, neighbourhood_vectors
from .geom import (
    STEP, Lattice, NotClosed, canonical, cells, diameter, signed_area, span,
    tiling_cover_check, vertices,
)
from .transforms import DoubleTileCertificate, NotSimple, decompose
from .words import has_combinatorial_self_intersection, reverse, substitute

ORACLE_CAP = 20


class InvalidBlock(ValueError):
    pass


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Block:
    """Sides of a tile read as ``A B A^-1 B^-1``; ``R`` becomes ``a``, ``U`` becomes ``b``."""

    a: str
    b: str

    @property
    def word(self) -> str:
        return self.a + self.b + reverse(self.a) + reverse(self.b)

    def is_valid(self) -> bool:
        w = self.word
        return bool(self.a) and bool(self.b) and not has_combinatorial_self_intersection(w)


def deform(w: str, block: Block) -> str:
    """Replace every unit step of ``w`` by the matching side of ``block``."""
    if not block.is_valid():
        raise InvalidBlock(f"block word {block.word!r} is not a simple closed path")
    return substitute(w, {"R": block.a, "U": block.b})


@dataclass(frozen=True)
class Verification:
    certificate: DoubleTileCertificate
    lattices: tuple


def tiling_lattices(cert: DoubleTileCertificate) -> tuple[Lattice, Lattice]:
    s = neighbourhood_vectors(cert.chain())
    return Lattice(s[0], s[2]), Lattice(s[1], s[3])


def verify_double_tile(w: str) -> Verification:
    """Certify ``w`` and check both tilings on a finite window."""
    if span(w) != (0, 0):
        raise NotClosed(f"word {w!r} is not closed")
    if not w or has_combinatorial_self_intersection(w):
        raise NotSimple(f"word {w!r} is not a simple closed path")
    if signed_area(w) < 0:
        w = reverse(w)
    cert = decompose(w)
    lattices = tiling_lattices(cert)
    radius = 2 * diameter(w)
    for lat in lattices:
        if not tiling_cover_check(w, lat, radius):
            raise AssertionError(f"certified lattice {lat} does not tile")
    return Verification(cert, lattices)


# ------------------------------------------------------------------------- oracle

def _sap_walk(max_perimeter: int, prefix: str, out: list):
    """Counterclockwise self-avoiding polygons from their lowest-leftmost vertex."""
    x = y = 0
    visited = {(0, 0)}
    path = []
    for c in prefix:
        dx, dy = STEP[c]
        x += dx
        y += dy
        if (x, y) in visited or y < 0 or (y == 0 and x < 0):
            return
        visited.add((x, y))
        path.append(c)
    moves = (("R", 1, 0), ("U", 0, 1), ("L", -1, 0), ("D", 0, -1))

    def walk(x, y, k):
        left = max_perimeter - k
        for c, dx, dy in moves:
            nx, ny = x + dx, y + dy
            if ny < 0 or (ny == 0 and nx < 0):
                continue
            if nx == 0 and ny == 0:
                if k + 1 >= 4:
                    path.append(c)
                    out.append("".join(path))
                    path.pop()
                continue
            if (nx, ny) in visited or abs(nx) + abs(ny) > left - 1:
                continue
            visited.add((nx, ny))
            path.append(c)
            walk(nx, ny, k + 1)
            path.pop()
            visited.discard((nx, ny))

    if prefix and (x, y) == (0, 0):
        return
    walk(x, y, len(prefix))


def self_avoiding_polygons(max_perimeter: int, prefix: str = "R") -> list[str]:
    out: list[str] = []
    _sap_walk(max_perimeter, prefix, out)
    return out


@dataclass(frozen=True)
class OracleTile:
    word: str
    factorizations: tuple
    chain_kinds: tuple  # kinds of the double chains over all factorization pairs


def _oracle_check(words: list[str]) -> list[OracleTile]:
    found = []
    for w in words:
        facts = theta_tile_factorizations(w)
        if len(facts) < 2:
            continue
        kinds = []
        certified = False
        for i in range(len(facts)):
            for j in range(i + 1, len(facts)):
                try:
                    chain, kind, _ = build_double_chain(w, facts[i], facts[j])
                except PatternMismatch:
                    kinds.append("none")
                    continue
                kinds.append(kind)
                a = lengths(chain)
                if a.a1 + a.a3 and a.a2 + a.a4:
                    certified = True
        if certified:
            found.append(OracleTile(w, tuple(facts), tuple(kinds)))
    return found


def _oracle_chunk(args):
    bound, prefix = args
    return _oracle_check(self_avoiding_polygons(bound, prefix))


@dataclass
class Census:
    max_perimeter: int
    tiles: list = field(default_factory=list)

    @property
    def words(self) -> list[str]:
        return [t.word for t in self.tiles]

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.words:
            out[len(w)] = out.get(len(w), 0) + 1
        return out


def oracle_enumerate(max_perimeter: int, jobs: int = 1, cap: int = ORACLE_CAP) -> Census:
    """All double tiles up to a perimeter, found without any chain transforms."""
    if max_perimeter > cap:
        raise CapExceeded(f"perimeter bound {max_perimeter} exceeds the cap {cap}")
    # the walk always opens with R; split the search on the next two steps
    prefixes = ["R" + a + b for a, b in product("RULD", repeat=2)]
    tasks = [(max_perimeter, p) for p in prefixes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_oracle_chunk, tasks))
    else:
        chunks = [_oracle_chunk(t) for t in tasks]
    tiles = [t for chunk in chunks for t in chunk]
    tiles.sort(key=lambda t: (len(t.word), t.word))
    return Census(max_perimeter, tiles)


# ---------------------------------------------------------------------- generator

def simple_blocks(total: int) -> list[Block]:
    """Valid blocks with ``|a| + |b| == total``, in a fixed order."""
    out = []
    for la in range(1, total):
        for a in product("RULD", repeat=la):
            for b in product("RULD", repeat=total - la):
                blk = Block("".join(a), "".join(b))
                if blk.is_valid():
                    out.append(blk)
    return out


@dataclass(frozen=True)
class GeneratedTile:
    word: str
    descent: tuple
    block: Block


def generate_census(max_perimeter: int) -> Census:
    """Canonical deformations of descendants of the cross up to a perimeter."""
    found: dict[str, GeneratedTile] = {}
    blocks_by_total: dict[int, list[Block]] = {}
    for d in enumerate_descendants(max_perimeter // 2):
        w = d.word
        h = w.count("R") + w.count("L")
        v = w.count("U") + w.count("D")
        total = 2
        while h + v * (total - 1) <= max_perimeter or h * (total - 1) + v <= max_perimeter:
            if total not in blocks_by_total:
                blocks_by_total[total] = simple_blocks(total)
            for blk in blocks_by_total[total]:
                if h * len(blk.a) + v * len(blk.b) > max_perimeter:
                    continue
                cw = canonical(deform(w, blk))
                if cw not in found:
                    found[cw] = GeneratedTile(cw, d.descent, blk)
            total += 1
    tiles = sorted(found.values(), key=lambda t: (len(t.word), t.word))
    return Census(max_perimeter, tiles)


# ---------------------------------------------------------------------- rendering

PALETTE = ("#e8b04a", "#5b8fd1", "#d16a5b", "#6cbf73", "#a77bd1", "#d1a35b", "#4fb3b3", "#c9c9c9")


def _path_d(w: str, start=(0, 0)) -> str:
    pts = vertices(w, start)
    cmds = [f"M{pts[0][0]} {-pts[0][1]}"]
    cmds += [f"L{x} {-y}" for x, y in pts[1:-1]]
    return " ".join(cmds) + " Z"


def _panel(w: str, lattice: Lattice | None, ox: int, size: int, scale: int, reach: int) -> list[str]:
    pts = vertices(w)
    cx = sum(p[0] for p in pts[:-1]) // (len(pts) - 1)
    cy = sum(p[1] for p in pts[:-1]) // (len(pts) - 1)
    half = size // 2
    out = [f'<g transform="translate({(ox + half) * scale} {half * scale}) scale({scale})">',
           f'<clipPath id="clip{ox}"><rect x="{-half}" y="{-half}" width="{size}" height="{size}"/></clipPath>',
           f'<g clip-path="url(#clip{ox})">']
    shifts = [(0, 0, 0)]
    if lattice is not None:
        shifts = [(m * lattice.g1.x + n * lattice.g2.x, m * lattice.g1.y + n * lattice.g2.y,
                   (m % 2) * 2 + n % 2) for m in range(-reach, reach + 1) for n in range(-reach, reach + 1)]
    for tx, ty, colour in shifts:
        fill = PALETTE[colour % len(PALETTE)]
        out.append(f'<path d="{_path_d(w, (tx - cx, ty - cy))}" fill="{fill}" stroke="#222" '
                   f'stroke-width="0.08"/>')
    out.append("</g></g>")
    return out


def render(w: str, cert: DoubleTileCertificate | None = None, scale: int = 12) -> str:
    """A self-contained SVG document: the outline, or both tilings side by side."""
    if span(w) != (0, 0):
        raise NotClosed(f"word {w!r} is not closed")
    size = max(2 * diameter(w) + 4, 12)
    panels = [None] if cert is None else list(tiling_lattices(cert))
    reach = 1 + size // max(1, min(abs(signed_area(w)), 4))
    reach = min(reach, 6)
    width = size * scale * len(panels)
    body = []
    for k, lat in enumerate(panels):
        body += _panel(w, lat, k * size, size, scale, reach)
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{size * scale}" '
            f'viewBox="0 0 {width} {size * scale}">')
    return "\n".join([head, f'<rect width="{width}" height="{size * scale}" fill="#ffffff"/>']
                     + body + ["</svg>", ""])
