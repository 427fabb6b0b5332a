"""Command-line interface: ``equivol <subcommand> ...``.

Exit codes: 0 success (for ``check``: realizable), 2 not realizable,
1 malformed input or flags.  Diagnostics go to standard error as a single
line.  No terminal styling is ever emitted, so ``EQUIVOL_NO_COLOR`` has
nothing to switch off.
"""

from __future__ import annotations

import argparse
import ast
import json
import math
import operator
import os
import sys
from typing import Sequence

from . import __version__
from .andreev import check
from .bounds import CASES, bounds_for, max_vertices_for_volume
from .census import (
    CensusError,
    annotate,
    dump_faces_json,
    filter_by_volume_cap,
    from_polyhedron,
    load_faces_json,
    parse_planar_code,
    serialize_planar_code,
    to_polyhedron,
    write_csv,
    write_jsonl,
)
from .families import FAMILIES, ParameterTooSmall, family
from .lobachevsky import V3, V8, lobachevsky
from .polyhedron import AbstractPolyhedron, PolyhedronError

EXIT_OK, EXIT_INPUT, EXIT_NOT_REALIZABLE = 0, 1, 2
VOLUME_DIGITS = 12

_NAMES = {"pi": math.pi, "V8": V8, "V3": V3}
_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_number(text: str) -> float:
    """Evaluate a small arithmetic expression over ``pi``, ``V8`` and ``V3``,
    e.g. ``pi/4`` or ``5*V3``."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError:
        raise argparse.ArgumentTypeError(f"cannot parse {text!r}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id in _NAMES:
            return _NAMES[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        raise argparse.ArgumentTypeError(f"unsupported expression {text!r}")

    try:
        value = ev(tree)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"division by zero in {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"{text!r} is not finite")
    return value


def _round_volumes(obj):
    if isinstance(obj, float):
        return float(f"{obj:.{VOLUME_DIGITS}g}")
    if isinstance(obj, dict):
        return {k: _round_volumes(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_round_volumes(v) for v in obj]
    return obj


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_polyhedra(path: str, fmt: str) -> list[AbstractPolyhedron]:
    data = _read_input(path)
    if fmt == "faces":
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError:
            raise InputError(f"{path} is not UTF-8 faces-JSON") from None
        return [load_faces_json(text)]
    graphs = parse_planar_code(data)
    if not graphs:
        raise InputError(f"{path} contains no graphs")
    return [to_polyhedron(g) for g in graphs]


def _open_out(path: str | None, binary: bool = False):
    if path in (None, "-"):
        return sys.stdout.buffer if binary else sys.stdout
    return open(path, "wb" if binary else "w", encoding=None if binary else "utf-8")


def cmd_check(args) -> int:
    polys = _load_polyhedra(args.input, args.format)
    code = EXIT_OK
    for p in polys:
        report = check(p, args.kind)
        print(json.dumps(report.to_dict()))
        if not report.realizable:
            code = EXIT_NOT_REALIZABLE
    return code


def cmd_bounds(args) -> int:
    polys = _load_polyhedra(args.input, args.format)
    code = EXIT_OK
    for p in polys:
        report = check(p, args.kind)
        if not report.realizable:
            print(
                f"equivol: not realizable ({', '.join(report.failed_conditions)}); no bounds",
                file=sys.stderr,
            )
            code = EXIT_NOT_REALIZABLE
            continue
        print(json.dumps(_round_volumes(bounds_for(p, args.kind).to_dict())))
    return code


def cmd_family(args) -> int:
    member = family(args.name, args.param)
    p = member.polyhedron
    if args.emit == "planar_code":
        out = _open_out(args.output, binary=True)
        out.write(serialize_planar_code([from_polyhedron(p)]))
        out.flush()
    else:
        out = _open_out(args.output)
        out.write(dump_faces_json(p, family=member.family, parameter=member.parameter) + "\n")
        out.flush()
    if out not in (sys.stdout, sys.stdout.buffer):
        out.close()
    return EXIT_OK


def cmd_lobachevsky(args) -> int:
    print(f"{lobachevsky(args.theta):.15g}")
    return EXIT_OK


def cmd_census(args) -> int:
    data = _read_input(args.input)
    graphs = parse_planar_code(data, check=False)
    source = "-" if args.input == "-" else os.path.basename(args.input)
    records = annotate(graphs, args.kind, jobs=args.jobs, source=source)
    if args.max_volume is not None:
        records = filter_by_volume_cap(records, args.max_volume)
    out = _open_out(args.output)
    write_jsonl(records, out)
    out.flush()
    if out is not sys.stdout:
        out.close()
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_csv(records, fh)
    print(f"equivol: {len(graphs)} graphs read, {len(records)} records written", file=sys.stderr)
    return EXIT_OK


def cmd_invert(args) -> int:
    if args.volume < 0:
        raise InputError("volume must be nonnegative")
    print(max_vertices_for_volume(args.volume, args.kind))
    return EXIT_OK


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="equivol", description="Equiangular hyperbolic polyhedra: realizability and volume bounds.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def polyhedron_input(p):
        p.add_argument("input", help='faces-JSON or planar_code file, or "-" for standard input')
        p.add_argument("--kind", choices=("pi2", "pi3"), required=True)
        p.add_argument("--format", choices=("faces", "planar_code"), default="faces")

    p = sub.add_parser("check", help="Andreev realizability report")
    polyhedron_input(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bounds", help="two-sided volume bounds")
    polyhedron_input(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("family", help="emit a member of a polyhedron family")
    p.add_argument("--name", choices=FAMILIES, required=True)
    p.add_argument("--param", type=int, required=True)
    p.add_argument("--emit", choices=("faces", "planar_code"), default="faces")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("lobachevsky", help="evaluate the Lobachevsky function")
    p.add_argument("theta", type=parse_number, help="angle, e.g. 0.5 or pi/6")
    p.set_defaults(func=cmd_lobachevsky)

    p = sub.add_parser("census", help="annotate a planar_code stream")
    p.add_argument("input")
    p.add_argument("--kind", choices=("pi2", "pi3"), required=True)
    p.add_argument("--max-volume", type=parse_number)
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.add_argument("--output", "-o")
    p.add_argument("--csv", help="also write the flat CSV export here")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("invert-bound", help="largest vertex count allowed by a volume cap")
    p.add_argument("--kind", choices=tuple(c for c in CASES if c != "mixed_pi2"), required=True)
    p.add_argument("--volume", type=parse_number, required=True)
    p.set_defaults(func=cmd_invert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, CensusError, PolyhedronError, ParameterTooSmall) as exc:
        print(f"equivol: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        return EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    """Like :func:`main` but also turns argparse's ``SystemExit`` into a return code."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
