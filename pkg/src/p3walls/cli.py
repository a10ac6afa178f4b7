"""Command-line interface.

Exit codes: 0 success, 2 usage errors (argparse), 1 domain errors, which are
printed to stderr as "ErrorName: message".  Every subcommand takes --json;
human output uses a couple of Greek glyphs unless P3WALLS_ASCII is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .bmt import (
    BridgelandParams,
    bridgeland_slope,
    ch3_admissible,
    q_form,
    q_null_locus,
    q_on_wall,
)
from .chern import ChernCharacter, TruncatedCharacter, discriminant, mu_slope
from .errors import DomainError
from .rationals import (
    INFINITY,
    ceil_div_fraction,
    floor_div_fraction,
    format_rational,
    parse_rational,
    parse_rational_tuple,
    sqrt_bounds,
)
from .riemann_roch import bott_h, chi, euler_pairing
from .scenario import (
    emit_report,
    load_scenario,
    render_scenario_svg,
)
from .tilt import (
    Branch,
    HalfPlanePoint,
    Semicircle,
    VerticalLine,
    format_wall,
    hyperbola_of,
    numerical_wall,
    wall_to_json,
)
from .wall_finder import FinderOptions, find_candidate_walls
from .diagram import DiagramWindow, render_wall_diagram


def _ascii_mode() -> bool:
    return bool(os.environ.get("P3WALLS_ASCII"))


def _sym(name: str) -> str:
    table = {"beta": "β", "alpha_sq": "α²", "chi": "χ"}
    ascii_table = {"beta": "beta", "alpha_sq": "alpha^2", "chi": "chi"}
    return ascii_table[name] if _ascii_mode() else table[name]


def _character(text: str) -> ChernCharacter:
    try:
        return ChernCharacter.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _truncated(text: str) -> TruncatedCharacter:
    try:
        return TruncatedCharacter.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _integer_beta(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError("beta must be an integer") from None


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point(text: str) -> HalfPlanePoint:
    try:
        beta, alpha_sq = parse_rational_tuple(text, 2)
        return HalfPlanePoint(beta, alpha_sq)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _semicircle(text: str) -> Semicircle:
    try:
        center, radius_sq = parse_rational_tuple(text, 2)
        return Semicircle(center, radius_sq)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _window(text: str) -> DiagramWindow:
    try:
        return DiagramWindow.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p3walls",
        description="Exact wall-and-chamber computations on projective 3-space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("walls", help="enumerate candidate walls on a vertical line")
    p.add_argument("--v", type=_character, required=True, metavar="CH")
    p.add_argument("--beta", type=_integer_beta, required=True)
    p.add_argument("--amax", type=int, default=64)
    p.add_argument("--ch3", action="store_true", help="attach admissible ch3 values")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("wall-between", help="numerical wall between two characters")
    p.add_argument("--v", type=_character, required=True, metavar="CH")
    p.add_argument("--w", type=_character, required=True, metavar="CH")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bmt-null", help="null locus of the quadratic form")
    p.add_argument("--v", type=_character, required=True, metavar="CH")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("q", help="evaluate or restrict the quadratic form")
    p.add_argument("--v", type=_character, required=True, metavar="CH")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--at", type=_point, metavar="BETA,ALPHA_SQ")
    grp.add_argument("--wall", type=_semicircle, metavar="CENTER,RADIUS_SQ")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("ch3", help="admissible third components on a pair's wall")
    p.add_argument("--v", type=_character, required=True, metavar="CH")
    p.add_argument("--sub", type=_truncated, required=True, metavar="CH012")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("chi", help="Euler characteristic or Euler pairing")
    p.add_argument("--v", type=_character, required=True, metavar="CH")
    p.add_argument("--w", type=_character, metavar="CH")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bott", help="line bundle cohomology on P^2 or P^3")
    p.add_argument("--n", type=int, required=True, choices=(2, 3))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("hyperbola", help="degeneracy hyperbola of a character")
    p.add_argument("--v", type=_character, required=True, metavar="CH")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("lambda", help="stability slope at a point")
    p.add_argument("--v", type=_character, required=True, metavar="CH")
    p.add_argument("--at", type=_point, required=True, metavar="BETA,ALPHA_SQ")
    p.add_argument("--s", type=_rational, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("scenario", help="scenario reports")
    scen_sub = p.add_subparsers(dest="scenario_command", required=True)
    run = scen_sub.add_parser("run", help="validate a scenario and emit its report")
    run.add_argument("file", help="TOML path or name of a bundled scenario")
    run.add_argument("--out", default=None, metavar="REPORT_MD")
    run.add_argument(
        "--json",
        nargs="?",
        const="-",
        default=None,
        metavar="OUT_JSON",
        help="write the JSON document ('-' or bare flag for stdout)",
    )
    run.add_argument("--svg", default=None, metavar="OUT_SVG")

    p = sub.add_parser("diagram", help="render a wall diagram to SVG")
    p.add_argument("--v", type=_character, required=True, metavar="CH")
    p.add_argument("--window", type=_window, required=True, metavar="BMIN,BMAX,AMAX")
    p.add_argument("--out", required=True, metavar="FILE_SVG")
    p.add_argument("--beta", type=_integer_beta, default=None)
    p.add_argument("--amax", type=int, default=64)
    p.add_argument("--json", action="store_true")

    return parser


def _print_doc(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _cmd_walls(args) -> int:
    opts = FinderOptions(a_max=args.amax, want_ch3=args.ch3)
    result = find_candidate_walls(args.v, args.beta, opts)
    if args.json:
        _print_doc(
            {
                "character": args.v.format(),
                "beta": args.beta,
                "walls": [
                    {
                        "wall": wall_to_json(cw.wall),
                        "pairs": [
                            {
                                "sub": p.sub.format(),
                                "quot": p.quot.format(),
                                "ch3_candidates": [format_rational(e) for e in p.ch3_candidates],
                                "filters": p.filters.to_json(),
                            }
                            for p in cw.pairs
                        ],
                    }
                    for cw in result.walls
                ],
                "warnings": [w.to_json() for w in result.warnings],
            }
        )
        return 0
    print(
        f"walls for {args.v.format()} at {_sym('beta')} = {args.beta}: "
        f"{len(result.walls)} found"
    )
    for cw in result.walls:
        print(f"  {format_wall(cw.wall)}")
        for p in cw.pairs:
            line = f"    sub {p.sub.format()}  quot {p.quot.format()}"
            if args.ch3:
                if p.ch3_candidates:
                    vals = ", ".join(format_rational(e) for e in p.ch3_candidates)
                    line += f"  ch3 in {{{vals}}}"
                else:
                    line += "  ch3: none recorded"
            print(line)
    for w in result.warnings:
        print(f"warning [{w.kind}]: {w.message}")
    return 0


def _cmd_wall_between(args) -> int:
    wall = numerical_wall(args.v, args.w)
    if args.json:
        _print_doc(
            {"v": args.v.format(), "w": args.w.format(), "wall": wall_to_json(wall)}
        )
        return 0
    print(format_wall(wall))
    return 0


def _cmd_bmt_null(args) -> int:
    locus = q_null_locus(args.v)
    if args.json:
        _print_doc({"character": args.v.format(), "locus": wall_to_json(locus)})
        return 0
    print(format_wall(locus))
    return 0


def _cmd_q(args) -> int:
    if args.at is not None:
        value = q_form(args.v, args.at)
        if args.json:
            _print_doc(
                {
                    "character": args.v.format(),
                    "beta": format_rational(args.at.beta),
                    "alpha_sq": format_rational(args.at.alpha_sq),
                    "value": format_rational(value),
                }
            )
            return 0
        print(format_rational(value))
        return 0
    restriction = q_on_wall(args.v, args.wall)
    if args.json:
        doc = {"character": args.v.format(), "wall": wall_to_json(args.wall)}
        doc.update(restriction.to_json())
        _print_doc(doc)
        return 0
    print(
        f"Q on {format_wall(args.wall)}: {format_rational(restriction.slope)}*"
        f"{_sym('beta')} + {format_rational(restriction.intercept)} on "
        f"[{format_rational(restriction.beta_min)}, {format_rational(restriction.beta_max)}]"
        f" -> {restriction.sign}"
    )
    return 0


def _cmd_ch3(args) -> int:
    wall = numerical_wall(args.v, args.sub)
    if not isinstance(wall, Semicircle):
        raise DomainError(
            f"pair has no semicircular wall ({format_wall(wall)})"
        )
    values = ch3_admissible(args.sub, args.v, wall)
    if args.json:
        _print_doc(
            {
                "character": args.v.format(),
                "sub": args.sub.format(),
                "wall": wall_to_json(wall),
                "admissible": [format_rational(e) for e in values],
            }
        )
        return 0
    print(f"wall: {format_wall(wall)}")
    if values:
        print("admissible ch3: " + ", ".join(format_rational(e) for e in values))
    else:
        print("admissible ch3: none")
    return 0


def _cmd_chi(args) -> int:
    if args.w is None:
        value = chi(args.v)
        doc = {"character": args.v.format(), "value": format_rational(value)}
    else:
        value = euler_pairing(args.v, args.w)
        doc = {
            "v": args.v.format(),
            "w": args.w.format(),
            "value": format_rational(value),
        }
    if args.json:
        _print_doc(doc)
        return 0
    print(format_rational(value))
    return 0


def _cmd_bott(args) -> int:
    if args.i is not None:
        try:
            value = bott_h(args.n, args.d, args.i)
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        if args.json:
            _print_doc({"n": args.n, "d": args.d, "i": args.i, "value": value})
            return 0
        print(value)
        return 0
    values = [bott_h(args.n, args.d, i) for i in range(args.n + 1)]
    if args.json:
        _print_doc({"n": args.n, "d": args.d, "h": values})
        return 0
    for i, value in enumerate(values):
        print(f"h^{i}(O({args.d})) = {value}")
    return 0


def _cmd_hyperbola(args) -> int:
    h = hyperbola_of(args.v)
    if isinstance(h, Branch):
        doc = {
            "type": "branch",
            "center": format_rational(h.center),
            "level": format_rational(h.level),
        }
        text = (
            f"({_sym('beta')} - {format_rational(h.center)})^2 - {_sym('alpha_sq')} "
            f"= {format_rational(h.level)}"
        )
    else:
        doc = {"type": "vertical_line", "beta": format_rational(h.beta)}
        text = f"vertical line {_sym('beta')} = {format_rational(h.beta)}"
    if args.json:
        _print_doc({"character": args.v.format(), "hyperbola": doc})
        return 0
    print(text)
    return 0


def _cmd_lambda(args) -> int:
    params = BridgelandParams(args.s)
    value = bridgeland_slope(args.v, args.at, params)
    rendered = "inf" if value is INFINITY else format_rational(value)
    if args.json:
        _print_doc(
            {
                "character": args.v.format(),
                "beta": format_rational(args.at.beta),
                "alpha_sq": format_rational(args.at.alpha_sq),
                "s": format_rational(args.s),
                "value": rendered,
            }
        )
        return 0
    print(rendered)
    return 0


def _resolve_scenario_path(name: str) -> Path:
    candidate = Path(name)
    if candidate.exists():
        return candidate
    bundled = resources.files("p3walls").joinpath("data", f"{name}.toml")
    if bundled.is_file():
        return Path(str(bundled))
    raise DomainError(f"no scenario file or bundled scenario named {name!r}")


def _cmd_scenario_run(args) -> int:
    cfg = load_scenario(_resolve_scenario_path(args.file))
    bundle = emit_report(cfg)
    wrote = []
    if args.out is not None:
        Path(args.out).write_text(bundle.markdown, encoding="ascii")
        wrote.append(args.out)
    if args.json is not None and args.json != "-":
        Path(args.json).write_text(bundle.json_text(), encoding="ascii")
        wrote.append(args.json)
    if args.svg is not None:
        Path(args.svg).write_text(render_scenario_svg(cfg), encoding="ascii")
        wrote.append(args.svg)
    if args.json == "-":
        print(bundle.json_text(), end="")
    elif args.out is None:
        print(bundle.markdown, end="")
    elif wrote:
        print("wrote " + ", ".join(wrote))
    return 0


def _default_diagram_beta(v: ChernCharacter) -> int:
    """Integer line just right of the branch foot with positive twisted degree."""
    if v.ch0 == 0:
        if v.ch1 <= 0:
            raise DomainError("rank-zero character needs positive ch1")
        return floor_div_fraction(v.ch2 / v.ch1) - 1
    if v.ch0 < 0:
        raise DomainError("supply --beta explicitly for negative-rank characters")
    delta = discriminant(v)
    if delta < 0:
        raise DomainError("character violates the discriminant inequality")
    mu = mu_slope(v)
    level = delta / (v.ch0 * v.ch0)
    scale = 10**6
    while True:
        lo, hi = sqrt_bounds(level, scale)
        if ceil_div_fraction(mu - hi) == ceil_div_fraction(mu - lo):
            beta = ceil_div_fraction(mu - hi)
            break
        if lo == hi:
            beta = ceil_div_fraction(mu - lo)
            break
        scale *= 1000
    while v.ch1 - beta * v.ch0 <= 0:
        beta -= 1
    return beta


def _cmd_diagram(args) -> int:
    beta = args.beta if args.beta is not None else _default_diagram_beta(args.v)
    result = find_candidate_walls(args.v, beta, FinderOptions(a_max=args.amax))
    walls = [cw.wall for cw in result.walls]
    svg = render_wall_diagram(
        args.v,
        args.window,
        walls=walls,
        bmt_null=q_null_locus(args.v),
    )
    Path(args.out).write_text(svg, encoding="ascii")
    if args.json:
        _print_doc(
            {
                "character": args.v.format(),
                "beta": beta,
                "out": args.out,
                "window": {
                    "beta_min": format_rational(args.window.beta_min),
                    "beta_max": format_rational(args.window.beta_max),
                    "alpha_max": format_rational(args.window.alpha_max),
                },
                "walls": len(walls),
                "warnings": [w.to_json() for w in result.warnings],
            }
        )
        return 0
    print(f"wrote {args.out} ({len(walls)} walls, {_sym('beta')} = {beta})")
    return 0


_HANDLERS = {
    "walls": _cmd_walls,
    "wall-between": _cmd_wall_between,
    "bmt-null": _cmd_bmt_null,
    "q": _cmd_q,
    "ch3": _cmd_ch3,
    "chi": _cmd_chi,
    "bott": _cmd_bott,
    "hyperbola": _cmd_hyperbola,
    "lambda": _cmd_lambda,
    "diagram": _cmd_diagram,
}


_VALUE_FLAGS = {"--v", "--w", "--sub", "--at", "--wall", "--window", "--s"}


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Join flag/value pairs whose value starts with '-' so argparse accepts them."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            tok in _VALUE_FLAGS
            and nxt is not None
            and nxt.startswith("-")
            and not nxt.startswith("--")
            and len(nxt) > 1
        ):
            out.append(f"{tok}={nxt}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    raw = list(sys.argv[1:]) if argv is None else list(argv)
    args = parser.parse_args(_merge_negative_values(raw))
    try:
        if args.command == "scenario":
            return _cmd_scenario_run(args)
        return _HANDLERS[args.command](args)
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
