"""Command-line entry point: ``stringnet {verify,areas,solve-spacing,render}``.

Stdout carries a single JSON document; logs and the solver's step log go to
stderr.  Exit codes: 0 when every requested check holds, 1 when one fails,
2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import _kernel
from .areas import (
    area_totals,
    closed_form_quad_sum,
    closed_form_total,
    closed_form_triangle_sum,
)
from .invariants import check_all
from .net import ConfigError, FrameParams, Net, NetConfig, Spacing, build_net
from .rational import as_rational, format_rational, parse_rational
from .render import RenderOptions, render
from .spacing import solve_spacing

log = logging.getLogger("stringnet")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def load_spacing_file(path: str | Path) -> Spacing:
    """Read a JSON array of ``"p/q"`` strings (ints allowed, floats refused)."""
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read spacing file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"spacing file is not valid JSON: {exc}") from None
    if not isinstance(raw, list):
        raise UsageError("spacing file must hold a JSON array")
    values = []
    for item in raw:
        if isinstance(item, bool) or not isinstance(item, (str, int)):
            raise UsageError(f"spacing entries must be 'p/q' strings, got {item!r}")
        try:
            values.append(as_rational(item))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        return Spacing(tuple(values))
    except ConfigError as exc:
        raise UsageError(str(exc)) from None


def config_from_args(args: argparse.Namespace) -> NetConfig:
    try:
        if args.theta is not None:
            frame = FrameParams.from_angle(args.theta, args.max_denominator)
            log.info("theta=%s approximated as a=%s b=%s", args.theta,
                     format_rational(frame.a), format_rational(frame.b))
        elif args.frame is not None:
            frame = FrameParams(*args.frame)
        else:
            frame = FrameParams()
        spacing = load_spacing_file(args.spacing_file) if args.spacing_file else None
        n = args.n
        if n is None:
            if spacing is None:
                raise UsageError("--n is required unless --spacing-file is given")
            n = spacing.n
        return NetConfig(n, frame, spacing)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None


def config_echo(cfg: NetConfig) -> dict:
    return {
        "n": cfg.n,
        "frame": [format_rational(cfg.frame.a), format_rational(cfg.frame.b)],
        "spacing": "equidistant" if cfg.is_equidistant else [format_rational(v) for v in cfg.spacing.values],
    }


def _area_summary(net: Net) -> dict:
    cfg = net.config
    a = cfg.frame.a
    totals = area_totals(net)
    total = totals.total
    closed = None
    if cfg.is_equidistant:
        if total != closed_form_total(cfg.n, a):
            raise ArithmeticError("summed area disagrees with the closed form")
        closed = {
            "triangle_sum": format_rational(closed_form_triangle_sum(cfg.n, a)),
            "quad_sum": format_rational(closed_form_quad_sum(cfg.n, a)),
            "total": format_rational(closed_form_total(cfg.n, a)),
        }
    limit = a / 6
    return {
        "triangle_sum": format_rational(totals.triangle_sum),
        "quad_sum": format_rational(totals.quad_sum),
        "per_diagonal": {str(d): format_rational(v) for d, v in totals.per_diagonal.items()},
        "total": format_rational(total),
        "closed_form": closed,
        "envelope_limit": format_rational(limit),
        "deviation_from_limit": format_rational(total - limit),
    }


def piece_table(net: Net) -> list[dict]:
    """Every piece with its exact area: boundary triangles, then each quadrilateral's five pieces."""
    den = 2 * net.denominator**2
    rows = [
        {"id": f"Tboundary({i})", "area": format_rational(Fraction(int(v), den))}
        for i, v in enumerate(_kernel.boundary_doubled(net))
    ]
    kinds = (("T", "t"), ("T'", "tp"), ("Tbar", "tbar"), ("Tbar'", "tbarp"), ("Q", "q"))
    for blk in _kernel.quad_blocks(net, overlap=0):
        for r in range(blk.own):
            i = blk.i0 + r
            for j in range(i + 2, net.n):
                for kind, attr in kinds:
                    v = getattr(blk, attr)[r, j]
                    rows.append({"id": f"{kind}({i},{j})", "area": format_rational(Fraction(int(v), den))})
    return rows


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = config_from_args(args)
    net = build_net(cfg)
    props = check_all(net, mirror=cfg.frame.b != 0)
    code = EXIT_OK if props.all_hold else EXIT_FAIL
    for name in props.failed():
        log.warning("%s fails", name)
    _emit({
        "config": config_echo(cfg),
        "properties": props.to_dict(),
        "areas": _area_summary(net),
        "solver": None,
        "exit_code": code,
    })
    return code


def cmd_areas(args: argparse.Namespace) -> int:
    cfg = config_from_args(args)
    net = build_net(cfg)
    areas = _area_summary(net)
    if not args.no_table:
        areas = {"pieces": piece_table(net), **areas}
    _emit({"config": config_echo(cfg), "properties": None, "areas": areas, "solver": None, "exit_code": EXIT_OK})
    return EXIT_OK


def cmd_solve_spacing(args: argparse.Namespace) -> int:
    outcome = solve_spacing(args.n)
    for line in outcome.steps:
        print(line, file=sys.stderr)
    code = EXIT_FAIL if outcome.status == "no_admissible_solution" else EXIT_OK
    _emit({"config": {"n": args.n}, "properties": None, "areas": None,
           "solver": outcome.to_dict(), "exit_code": code})
    return code


def cmd_render(args: argparse.Namespace) -> int:
    cfg = config_from_args(args)
    try:
        opts = RenderOptions(
            width_px=args.width,
            checkered=args.checkered,
            show_envelope=args.envelope,
            show_vertices=args.vertices,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = render(build_net(cfg), opts)
    out = Path(args.out)
    try:
        out.write_bytes(data)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None
    log.info("wrote %s (%d bytes)", out, len(data))
    _emit({"config": config_echo(cfg), "svg": {"path": str(out), "bytes": len(data)}, "exit_code": EXIT_OK})
    return EXIT_OK


def _add_net_args(p: argparse.ArgumentParser, n_required: bool = True) -> None:
    p.add_argument("--n", type=int, required=n_required, help="number of pegs per axis minus one")
    frame = p.add_mutually_exclusive_group()
    frame.add_argument("--frame", nargs=2, type=_rational_arg, metavar=("A", "B"),
                       help="slanted-axis direction as two rationals, e.g. 3/5 4/5")
    frame.add_argument("--theta", type=float,
                       help="slant angle in radians; cos/sin are approximated by rationals")
    p.add_argument("--max-denominator", type=int, default=10**6,
                   help="denominator bound for --theta (default 10^6)")
    sp = p.add_mutually_exclusive_group()
    sp.add_argument("--spacing", choices=["equidistant"], default="equidistant")
    sp.add_argument("--spacing-file", help="JSON array of 'p/q' strings, from '0' to '1'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stringnet", description="Exact string-art net verification.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run every symmetry check and print a JSON report")
    _add_net_args(p, n_required=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("areas", parents=[common], help="exact piece areas, sums and closed forms")
    _add_net_args(p, n_required=False)
    p.add_argument("--no-table", action="store_true", help="omit the per-piece table")
    p.set_defaults(func=cmd_areas)

    p = sub.add_parser("solve-spacing", parents=[common], help="derive the spacings with equal-area diagonals")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_solve_spacing)

    p = sub.add_parser("render", parents=[common], help="write an SVG drawing of a net")
    _add_net_args(p, n_required=False)
    p.add_argument("--out", required=True, help="output SVG path")
    p.add_argument("--width", type=int, default=1000, help="width in pixels (>= 100)")
    p.add_argument("--checkered", action="store_true", help="fill quadrilaterals by diagonal")
    p.add_argument("--envelope", action="store_true", help="overlay the envelope curve")
    p.add_argument("--vertices", action="store_true", help="mark every vertex")
    p.set_defaults(func=cmd_render)
    return parser


def _configure_logging(verbose: bool) -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(logging.INFO if verbose else logging.WARNING)


_NEGATIVE_RATIONAL = re.compile(r"^-\d+/\d+$")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    # argparse would read "-4/5" as an option flag
    argv = [" " + a if _NEGATIVE_RATIONAL.match(a) else a for a in argv]
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    if getattr(args, "n", None) is not None and args.n < 1:
        parser.error("--n must be a positive integer")
    if getattr(args, "max_denominator", 1) < 1:
        parser.error("--max-denominator must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"stringnet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
