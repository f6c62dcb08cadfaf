"""Command-line front end: ``boardforge build|export|query``.

Exit codes: 0 success, 1 input or evaluation error, 2 validation errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from . import __version__
from .bgdl import build as build_board
from .directions import AbsoluteDirection, RelativeDirection, resolve_relative
from .errors import BoardError, EmptyResultWarning, UnknownRelation
from .export import to_json, to_svg
from .graph import ElementId, errors_only, validate
from .relations import RelationType
from .traversal import Ambiguity, generate_radials, walk

EXIT_OK, EXIT_ERROR, EXIT_INVALID = 0, 1, 2


def _color(stream) -> bool:
    return stream.isatty() and not os.environ.get("BOARDFORGE_NO_COLOR")


def _diagnose(exc: BaseException, source: str | None, stream=None):
    stream = stream or sys.stderr
    red, dim, reset = ("\033[31m", "\033[2m", "\033[0m") if _color(stream) else ("", "", "")
    print(f"{red}error{reset}: {exc}", file=stream)
    span = getattr(exc, "span", None)
    if span and source is not None:
        lines = source.splitlines() or [""]
        line, col = span[0], span[1]
        if 1 <= line <= len(lines):
            text = lines[line - 1]
            print(f"{dim}{line:>4} |{reset} {text}", file=stream)
            print(f"{dim}     |{reset} {' ' * (col - 1)}{red}^{reset}", file=stream)


def _read_source(args) -> str:
    if args.expr is not None:
        return args.expr
    if args.file is None:
        raise SystemExit("boardforge: give a description file or -e EXPR")
    if args.file == "-":
        return sys.stdin.read()
    with open(args.file, encoding="utf-8") as fh:
        return fh.read()


def _parse_element(text: str) -> ElementId:
    try:
        return ElementId.parse(text)
    except ValueError as exc:
        raise BoardError(str(exc)) from None


def _load(args):
    """(source, board) or raise; EmptyResult warnings are surfaced by validate."""
    source = args.source
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", EmptyResultWarning)
        board = build_board(source)
    return source, board


def cmd_build(args) -> int:
    source, board = _load(args)
    problems = validate(board)
    errors = errors_only(problems)
    nv, ne, nc = board.counts
    status = "ok" if not errors else f"violations={len(errors)}"
    notes = len(problems) - len(errors)
    if notes and not errors:
        status += f" warnings={notes}"
    print(f"cells={nc} vertices={nv} edges={ne} {status}")
    for v in problems:
        print(f"{v.severity}: {v.kind} {v.element or ''} {v.message}".replace("  ", " "), file=sys.stderr)
    return EXIT_INVALID if errors else EXIT_OK


def _radial_index(board, args):
    if getattr(args, "branching", False):
        return generate_radials(board, board.relations, board.directions, branching=True)
    return board.radials


def cmd_export(args) -> int:
    _, board = _load(args)
    if args.format == "json":
        text = to_json(board, radials=_radial_index(board, args))
    else:
        focus = _parse_element(args.focus) if args.focus else None
        show = [s for s in (args.show or "").split(",") if s]
        unknown = set(show) - {"relations", "radials", "directions"}
        if unknown:
            raise BoardError(f"--show accepts relations, radials, directions; got {sorted(unknown)}")
        relation = RelationType.parse(args.relation) if args.relation else None
        text = to_svg(board, show=show, focus=focus, relation=relation, radials=_radial_index(board, args))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _emit(obj):
    print(json.dumps(obj, separators=(",", ":")))


def cmd_query(args) -> int:
    _, board = _load(args)
    el = board.check_element(_parse_element(args.element))
    st, idx = el
    if args.relation:
        rel = RelationType.parse(args.relation)
        _emit({"element": str(el), "relation": rel.value, "neighbors": list(board.relations.neighbors(st, rel, idx))})
    if args.radials:
        index = generate_radials(board, board.relations, board.directions, branching=args.branching,
                                 site_type=st, origins=[idx])
        try:
            rel, direction = RelationType.parse(args.radials), None
        except UnknownRelation:
            try:
                rel, direction = None, AbsoluteDirection.parse(args.radials)
            except ValueError:
                raise UnknownRelation(f"{args.radials!r} is neither a relation nor a direction") from None
        for r in index.from_site(el, rel, direction, board.directions):
            _emit({"origin": str(r.origin), "relation": r.relation.value, "direction": r.direction.value,
                   "branch": r.branch, "path": [p.index for p in r.path]})
    if args.walk:
        headings = args.headings
        if headings.lower() != "all":
            headings = AbsoluteDirection.parse(headings)
        res = walk(board, el, args.walk, headings=headings, ambiguity=Ambiguity(args.ambiguity))
        _emit({"origin": str(el), "walk": args.walk, "destinations": [d.index for d in res.destinations]})
    if args.relative:
        facing = AbsoluteDirection.parse(args.facing)
        rel = RelationType.parse(args.relative_relation)
        target = resolve_relative(board, st, idx, facing, args.rotation, rel, RelativeDirection.parse(args.relative))
        _emit({"origin": str(el), "relative": args.relative, "facing": facing.value, "target": target})
    if args.directions:
        _emit({"origin": str(el),
               "directions": {d.value: j for d, j in board.directions.of(st, idx).items()}})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boardforge", description="Build and analyse game boards.")
    parser.add_argument("--version", action="version", version=f"boardforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", nargs="?", help="description file ('-' for stdin)")
        p.add_argument("-e", "--expr", help="inline description instead of a file")

    p = sub.add_parser("build", help="build a board and print element counts")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("export", help="write JSON or SVG")
    common(p)
    p.add_argument("--format", choices=("json", "svg"), default="json")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--show", help="SVG overlays: relations,radials,directions")
    p.add_argument("--focus", help="element the overlays start from, e.g. Cell:0")
    p.add_argument("--relation", help="restrict relation fans and radials to one relation")
    p.add_argument("--branching", action="store_true", help="fork radials at ties")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("query", help="answer topology questions as JSON lines")
    common(p)
    p.add_argument("--element", required=True, help="Type:index, e.g. Cell:27")
    p.add_argument("--relation", help="neighbour list for a relation")
    p.add_argument("--radials", help="radials in a direction (N, CW, ...) or relation")
    p.add_argument("--branching", action="store_true", help="fork radials at ties")
    p.add_argument("--walk", help="F/L/R tokens, e.g. F,F,R")
    p.add_argument("--headings", default="all", help="'all' or a compass direction")
    p.add_argument("--ambiguity", default="KeepAll", choices=[a.value for a in Ambiguity])
    p.add_argument("--directions", action="store_true", help="direction labels of the element")
    p.add_argument("--relative", help="relative direction, e.g. FR")
    p.add_argument("--facing", default="N")
    p.add_argument("--rotation", type=int, default=0)
    p.add_argument("--relative-relation", default="Adjacent")
    p.set_defaults(func=cmd_query)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    source = None
    try:
        source = args.source = _read_source(args)
        return args.func(args)
    except BoardError as exc:
        _diagnose(exc, source)
        return EXIT_ERROR
    except (OSError, ValueError) as exc:
        _diagnose(exc, None)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
