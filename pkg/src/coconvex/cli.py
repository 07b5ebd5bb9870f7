"""Command line interface.

Exit codes: 0 when every check is consistent with the theorems, 1 for usage
or validation errors, 2 when a check is violated (a witness file is written).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import body as bodies
from . import polytope as poly
from . import theorems as th
from .errors import GeometryError, InstanceError, PrecisionExhausted, UnknownName
from .figure import FigureSpec, emit_figure
from .fuzz import run_fuzz
from .geom import Hyperplane, format_scalar, parse_scalar
from .instance import Instance, document, parse_instance


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _rational(text):
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vector(text):
    try:
        return tuple(parse_scalar(c) for c in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load(path) -> Instance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def _body(inst: Instance, name: str):
    if name not in inst.bodies:
        raise UnknownName(f"no body named {name!r}", name)
    return inst.bodies[name]


def _polytope(inst: Instance, name: str):
    if name not in inst.polytopes:
        raise UnknownName(f"no polytope named {name!r}", name)
    return inst.polytopes[name]


def _hyperplane(args):
    if args.normal is None:
        return None
    return Hyperplane(args.normal, args.offset)


def cmd_volume(args):
    inst = _load(args.instance)
    names = args.names or list(inst.bodies) + list(inst.polytopes)
    for name in names:
        if name in inst.bodies:
            v = bodies.volume(inst.bodies[name])
        else:
            v = poly.volume(_polytope(inst, name))
        print(f"{name} {format_scalar(v)}")
    return 0


def _emit_body(inst, K, name):
    doc = document(inst.cone, {name: K}, {})
    print(json.dumps(doc, indent=2))
    print(f"volume {format_scalar(K.volume)}", file=sys.stderr)


def cmd_combine(args):
    inst = _load(args.instance)
    K = bodies.combine(args.lam, _body(inst, args.first), _body(inst, args.second))
    _emit_body(inst, K, args.name)
    return 0


def cmd_oplus(args):
    inst = _load(args.instance)
    K = bodies.oplus(_body(inst, args.first), _body(inst, args.second))
    _emit_body(inst, K, args.name)
    return 0


def cmd_check(args):
    inst = _load(args.instance)
    if args.kind == "cylinder":
        h = _hyperplane(args)
        if h is None:
            raise GeometryError("check cylinder needs --normal (and optionally --offset)")
        report = th.check_cylinder_concavity(
            _polytope(inst, args.first), _polytope(inst, args.second), args.lam, h
        )
    else:
        fn = th.check_reversed_bm if args.kind == "bm" else th.check_volume_convexity
        report = fn(_body(inst, args.first), _body(inst, args.second), args.lam)
    print(report.record())
    if report.verdict is th.Verdict.VIOLATED:
        d = Path(args.witness_dir)
        d.mkdir(parents=True, exist_ok=True)
        path = d / f"witness-{args.kind}.json"
        path.write_text(json.dumps(report.witness, indent=2, sort_keys=True) + "\n")
        print(f"witness={path}")
        return 2
    return 0


def cmd_fuzz(args):
    summary = run_fuzz(args.dim, args.count, args.seed, args.witness_dir)
    print("\n".join(summary.lines()))
    return 2 if summary.failed else 0


def cmd_plot(args):
    inst = _load(args.instance)
    svg = emit_figure(FigureSpec(args.body, _hyperplane(args)), inst)
    if args.output:
        Path(args.output).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="coconvex", description="Exact computations with C-coconvex bodies.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_instance(sp):
        sp.add_argument("--instance", required=True, help="instance JSON file")
        return sp

    def with_hyperplane(sp):
        sp.add_argument("--normal", type=_vector, help="hyperplane normal, e.g. 0,-1")
        sp.add_argument("--offset", type=_rational, default=parse_scalar("0"))

    sp = with_instance(sub.add_parser("volume", help="exact volumes of named objects"))
    sp.add_argument("names", nargs="*")
    sp.set_defaults(func=cmd_volume)

    sp = with_instance(sub.add_parser("combine", help="(1-lambda) K1 (+) lambda K2"))
    sp.add_argument("--lambda", dest="lam", type=_rational, required=True)
    sp.add_argument("--name", default="result")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(func=cmd_combine)

    sp = with_instance(sub.add_parser("oplus", help="coconvex sum K1 (+) K2"))
    sp.add_argument("--name", default="result")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(func=cmd_oplus)

    sp = with_instance(sub.add_parser("check", help="run one inequality checker"))
    sp.add_argument("kind", choices=["bm", "convexity", "cylinder"])
    sp.add_argument("--lambda", dest="lam", type=_rational, required=True)
    sp.add_argument("--witness-dir", default="witnesses")
    with_hyperplane(sp)
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("fuzz", help="random triples through every checker")
    sp.add_argument("--instance", help="ignored; accepted for a uniform interface")
    sp.add_argument("--dim", type=int, default=2)
    sp.add_argument("--count", type=int, default=1000)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--witness-dir", default="witnesses")
    sp.set_defaults(func=cmd_fuzz)

    sp = with_instance(sub.add_parser("plot", help="SVG figure of a planar body"))
    sp.add_argument("body")
    sp.add_argument("--output", "-o")
    with_hyperplane(sp)
    sp.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GeometryError, InstanceError, PrecisionExhausted, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
