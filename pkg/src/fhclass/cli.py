"""Command line entry point: ``fhclass {check,verify,radius,render}``.

Exit codes: 0 pass/member, 1 fail/non-member, 2 boundary case or
degenerate functional, 3 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys

from . import geometry, mapfile, render, verify
from .classes import ClassSpec, Verdict, classify
from .harmap import DEFAULT_ANGLES, DiskGrid

EXIT_OK, EXIT_FAIL, EXIT_BOUNDARY, EXIT_INPUT = 0, 1, 2, 3

_VERDICT_EXIT = {Verdict.MEMBER: EXIT_OK, Verdict.NON_MEMBER: EXIT_FAIL,
                 Verdict.BOUNDARY_CASE: EXIT_BOUNDARY}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _emit(args, record: dict, text: str):
    if args.format == "json-lines":
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _grid(args) -> DiskGrid:
    return DiskGrid.default(r_max=args.r_max, angles=args.grid_angles)


def cmd_check(args) -> int:
    f, _ = mapfile.read(args.input)
    spec = ClassSpec(args.lam, pinned=args.pinned)
    report = classify(f, spec, resolve_boundary=not args.no_resolve)
    record = {"command": "check", "lambda": spec.lam, "pinned": spec.pinned, **report.as_dict()}
    lines = [f"verdict: {report.verdict.value}",
             f"defect_sup: {report.defect_sup:.12g}",
             f"margin: {report.margin:.6g}",
             f"witness: {report.witness:.6g}",
             f"method: {report.method.value}"]
    lines += [f"violation: {v}" for v in report.violations]
    lines += [f"note: {n}" for n in report.notes]
    _emit(args, record, "\n".join(lines))
    return _VERDICT_EXIT[report.verdict]


def cmd_verify(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    if args.suite != "all" and args.suite not in verify.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    report = verify.run(args.suite, seed=args.seed, samples=args.samples, grid=_grid(args))
    for e in report.entries:
        status = "PASS" if e.passed else "FAIL"
        text = (f"[{status}] {e.theorem:<22} {e.anchor}\n"
                f"       samples={e.samples} violations={e.violations} "
                f"worst_margin={e.worst_margin:.3e} elapsed={e.elapsed:.2f}s")
        _emit(args, {"command": "verify", "seed": args.seed, **e.as_dict()}, text)
    _emit(args, {"command": "verify", "seed": args.seed, "suite": args.suite, "overall_pass": report.passed},
          f"overall: {'PASS' if report.passed else 'FAIL'} (seed {args.seed})")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_radius(args) -> int:
    f, _ = mapfile.read(args.input)
    tol = args.tol if args.tol is not None else 1e-3
    try:
        br = geometry.radius_bracket(f, args.kind, tol=tol, r_max=args.r_max, angles=args.grid_angles)
    except geometry.DegenerateError as exc:
        _emit(args, {"command": "radius", "kind": args.kind, "error": str(exc)}, f"degenerate: {exc}")
        return EXIT_BOUNDARY
    _emit(args, {"command": "radius", "kind": args.kind, "lo": br.lo, "hi": br.hi, "tol": br.tol},
          f"lo: {br.lo:.6f}\nhi: {br.hi:.6f}\ntol: {br.tol:g}")
    return EXIT_OK


def cmd_render(args) -> int:
    f, _ = mapfile.read(args.input)
    try:
        render.render(f, args.output, args.style, r_max=args.r_max)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
    _emit(args, {"command": "render", "output": str(args.output), "style": args.style},
          f"wrote {args.output}")
    return EXIT_OK


def _lambda(text):
    val = float(text)
    if not 0 < val <= 1:
        raise argparse.ArgumentTypeError("lambda must lie in (0, 1]")
    return val


def _r_max(text):
    val = float(text)
    if not 0 < val <= 1:
        raise argparse.ArgumentTypeError("r-max must lie in (0, 1]")
    return val


def _common(suppress: bool) -> argparse.ArgumentParser:
    """Global flags; subcommands repeat them with suppressed defaults so either position works."""
    common = argparse.ArgumentParser(add_help=False)

    def default(value):
        return argparse.SUPPRESS if suppress else value

    common.add_argument("--seed", type=int, default=default(0), help="seed for random members (default 0)")
    common.add_argument("--tol", type=float, default=default(None), help="radius bracket width (default 1e-3)")
    common.add_argument("--grid-angles", type=int, default=default(DEFAULT_ANGLES), help="angles per grid circle")
    common.add_argument("--r-max", type=_r_max, default=default(0.999), help="outermost grid radius")
    common.add_argument("--format", choices=("json-lines", "text"), default=default("json-lines"))
    common.add_argument("-v", "--verbose", action="store_true", default=default(False))
    return common


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fhclass", description=__doc__.splitlines()[0], parents=[_common(False)])
    common = _common(True)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="membership report for a map file")
    c.add_argument("input")
    c.add_argument("--lambda", dest="lam", type=_lambda, default=1.0)
    pin = c.add_mutually_exclusive_group()
    pin.add_argument("--pinned", dest="pinned", action="store_true", default=True,
                     help="require g'(0) = 0 (default)")
    pin.add_argument("--unpinned", dest="pinned", action="store_false")
    c.add_argument("--no-resolve", action="store_true",
                   help="report boundary cases as such instead of resolving them")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", parents=[common], help="run sampled verification suites")
    v.add_argument("suite", help=f"one of {', '.join(verify.SUITES)}, all")
    v.add_argument("--samples", type=int, default=50)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("radius", parents=[common], help="bracket the starlike/convex radius of a map")
    r.add_argument("input")
    r.add_argument("--kind", choices=("starlike", "convex"), default="convex")
    r.set_defaults(func=cmd_radius)

    d = sub.add_parser("render", parents=[common], help="write an SVG picture of a map")
    d.add_argument("input")
    d.add_argument("output")
    d.add_argument("--style", choices=("grid_image", "boundary_curve"), default="boundary_curve")
    d.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        if args.tol is not None and (not math.isfinite(args.tol) or args.tol < 1e-4):
            raise UsageError("--tol must be at least 1e-4")
        if args.grid_angles < 8:
            raise UsageError("--grid-angles must be at least 8")
        return args.func(args)
    except UsageError as exc:
        print(f"fhclass: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (mapfile.MapFileError, ValueError) as exc:
        print(f"fhclass: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
