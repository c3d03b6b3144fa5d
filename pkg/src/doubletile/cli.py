"""Command line front end.

Exit codes: 0 on success, 1 when a word is not a double tile (or a census
comparison disagrees), 2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .chains import NotDoubleChain, WordChain, type_of
from .descend import neighbourhood_vectors
from .gaussian import BadPair, clover_plan, clovers_for, is_proper, mebane_construction
from .geom import NotClosed, canonical, signed_area
from .tiler import (
    CapExceeded, InvalidBlock, Block, deform, generate_census, oracle_enumerate, render,
    verify_double_tile,
)
from .transforms import (
    DoubleTileCertificate, Loop, NotDoubleTile, NotSimple, decompose, format_descent,
    reduce_to_base, repackage_descent,
)

FORMAT = 1


class InputError(ValueError):
    pass


def _word(text: str) -> str:
    w = text.strip()
    if not w or set(w) - set("RULD"):
        raise InputError(f"boundary word must be a nonempty string over R, U, L, D: {text!r}")
    return w


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _record(w: str) -> dict:
    cert = decompose(w)
    chain = cert.chain()
    return {
        "format": FORMAT,
        "word": w,
        "descent": format_descent(cert.descent),
        "type": list(type_of(chain)),
        "s_vectors": [[v.x, v.y] for v in neighbourhood_vectors(chain)],
        "area": signed_area(w),
    }


def cmd_verify(args, out) -> int:
    result = verify_double_tile(_word(args.word))
    out.write(result.certificate.to_json() + "\n")
    return 0


def cmd_reduce(args, out) -> int:
    try:
        u = WordChain.parse(args.chain)
    except ValueError as e:
        raise InputError(str(e)) from e
    log = reduce_to_base(u)
    if isinstance(log.base, Loop):
        base = {"kind": "loop", "chain": str(log.base.chain)}
    else:
        base = {"kind": "root", "x": log.base.x, "y": log.base.y, "shift": log.base.shift}
    out.write(_dump({
        "format": FORMAT,
        "steps": list(log.steps),
        "base": base,
        "descent": format_descent(repackage_descent(log.steps)),
    }) + "\n")
    return 0


def cmd_enumerate(args, out) -> int:
    census = generate_census(args.max_perimeter)
    if args.emit == "json":
        lines = [_dump(_record(t.word)) for t in census.tiles]
        text = "".join(line + "\n" for line in lines)
        if args.out:
            Path(args.out).write_text(text)
        else:
            out.write(text)
        return 0
    if not args.out:
        raise InputError("--emit svg-dir needs --out DIR")
    target = Path(args.out)
    target.mkdir(parents=True, exist_ok=True)
    for n, t in enumerate(census.tiles):
        cert = decompose(t.word)
        (target / f"tile{n:04d}_{len(t.word)}.svg").write_text(render(t.word, cert))
    out.write(f"{len(census.tiles)} files written to {target}\n")
    return 0


def cmd_oracle(args, out) -> int:
    census = oracle_enumerate(args.max_perimeter, jobs=args.jobs)
    n = len(census.tiles)
    noun = "tile" if n == 1 else "tiles"
    if not args.compare:
        for w in census.words:
            out.write(w + "\n")
        out.write(f"{n} {noun}\n")
        return 0
    generated = set(generate_census(args.max_perimeter).words)
    found = set(census.words)
    if generated == found:
        out.write(f"{n} {noun}, generator agrees\n")
        return 0
    out.write(f"{n} {noun}, generator disagrees\n")
    for w in sorted(found - generated):
        out.write(f"oracle only: {w}\n")
    for w in sorted(generated - found):
        out.write(f"generator only: {w}\n")
    return 1


def cmd_deform(args, out) -> int:
    w = _word(args.word)
    block = Block(_word(args.block_a), _word(args.block_b))
    out.write(canonical(deform(w, block)) + "\n")
    return 0


def cmd_render(args, out) -> int:
    w = _word(args.word)
    cert = None
    if args.cert_file:
        cert = DoubleTileCertificate.from_json(Path(args.cert_file).read_text())
    elif args.cert:
        cert = verify_double_tile(w).certificate
        w = cert.word
    svg = render(w, cert)
    if args.output == "-":
        out.write(svg)
    else:
        Path(args.output).write_text(svg)
    return 0


def _pair(args) -> tuple[int, int]:
    a, b = args.a, args.b
    if a <= 0 or b <= 0:
        raise InputError("a and b must be positive")
    return (a, b) if a < b else (b, a)


def cmd_clover(args, out) -> int:
    a, b = _pair(args)
    plan = clover_plan(a, b)
    clovers = clovers_for(a, b)
    if args.emit == "svg":
        out.write(render(canonical(clovers[0].word)))
        return 0
    out.write(_dump({
        "format": FORMAT,
        "a": a,
        "b": b,
        "p": a * a + b * b,
        "k": plan.k,
        "plan": list(plan.steps),
        "clovers": [{"descent": format_descent(d.descent), "word": canonical(d.word)}
                    for d in clovers],
    }) + "\n")
    return 0


def cmd_mebane(args, out) -> int:
    a, b = _pair(args)
    if not is_proper(a, b):
        print(f"warning: {a}^2 + {b}^2 is not an odd prime", file=sys.stderr)
    shapes = mebane_construction(a, b)
    out.write(_dump({
        "format": FORMAT,
        "a": a,
        "b": b,
        "p": a * a + b * b,
        "count": len(shapes),
        "shapes": [sorted(list(c) for c in s) for s in shapes],
    }) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="doubletile", description="Polyomino double tiles.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="certify a boundary word as a double tile")
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("reduce", help="reduce an interleaved double chain to a root or loop")
    s.add_argument("--chain", required=True, help="eight parts separated by ':', '-' for empty")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("enumerate", help="generate double tiles up to a perimeter")
    s.add_argument("--max-perimeter", type=int, required=True)
    s.add_argument("--emit", choices=("json", "svg-dir"), default="json")
    s.add_argument("--out")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("oracle", help="exhaustive search for double tiles")
    s.add_argument("--max-perimeter", type=int, required=True)
    s.add_argument("--compare", action="store_true", help="check against the generator")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("deform", help="substitute a block into a boundary word")
    s.add_argument("--word", required=True)
    s.add_argument("--block-a", required=True)
    s.add_argument("--block-b", required=True)
    s.set_defaults(func=cmd_deform)

    s = sub.add_parser("render", help="write an SVG of a tile and its tilings")
    s.add_argument("--word", required=True)
    s.add_argument("--cert", action="store_true", help="certify the word and draw both tilings")
    s.add_argument("--cert-file", help="certificate JSON to draw the tilings from")
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("clover", help="clovers for a Gaussian prime a + bi")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--emit", choices=("json", "svg"), default="json")
    s.set_defaults(func=cmd_clover)

    s = sub.add_parser("mebane", help="z-good polyominoes from the grid-graph construction")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.set_defaults(func=cmd_mebane)
    return p


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return args.func(args, out)
    except NotDoubleTile as e:
        print(f"not a double tile: {e}", file=sys.stderr)
        return 1
    except (InputError, NotClosed, NotSimple, NotDoubleChain, InvalidBlock, BadPair,
            CapExceeded, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
