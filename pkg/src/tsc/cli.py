"""Command-line front end: normalize, decide, check, frame-dot.

Thin client over the handler functions in tsc.service.  Exit codes: 0 on
success (for decide: derivable), 1 for a non-derivable sequent, 2 for usage
or parse errors.  --machine switches to a stable line-oriented key=value
format for scripting.
"""

from __future__ import annotations

import argparse
import sys

from tsc.ordinal import ParseError
from tsc.semantics import InvalidLSequence
from tsc.service import handle_check, handle_decide, handle_frame_dot, handle_normalize

EXIT_DERIVABLE = 0
EXIT_NOT_DERIVABLE = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsc",
        description="Ordinal-exponent modal calculus: normalization, sequent "
        "derivability, model checking, and frame visualization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    normalize = sub.add_parser("normalize", help="print the normal form and minimal point")
    normalize.add_argument("formula", help="formula text, e.g. '<0^1><1^1>T'")
    normalize.add_argument("--machine", action="store_true", help="stable line format")

    decide = sub.add_parser("decide", help="decide a sequent (exit 0 derivable, 1 not)")
    decide.add_argument("sequent", help="sequent text, e.g. '<1^1>T |- <0^w>T'")
    decide.add_argument("--machine", action="store_true", help="stable line format")

    check = sub.add_parser("check", help="evaluate a formula at a point")
    check.add_argument("point", help="point text, e.g. '[w*2, 1]'")
    check.add_argument("formula", help="formula text")
    check.add_argument("--machine", action="store_true", help="stable line format")

    frame = sub.add_parser("frame-dot", help="emit a DOT graph of a frame fragment")
    frame.add_argument("max_coordinate", help="coordinate bound (ordinal text), e.g. 'w^2'")
    frame.add_argument("support", type=int, help="maximum number of coordinates")
    frame.add_argument(
        "--bases",
        default="0,1",
        help="comma-separated relation bases to draw (default 0,1)",
    )
    frame.add_argument(
        "--coefficient-cap",
        type=int,
        default=2,
        help="largest CNF coefficient enumerated (default 2)",
    )
    frame.add_argument(
        "--full",
        action="store_true",
        help="draw every related pair instead of covering edges only",
    )
    frame.add_argument("--machine", action="store_true", help="no-op: DOT is already stable")
    return parser


def _run_normalize(args: argparse.Namespace) -> int:
    result = handle_normalize(args.formula)
    if args.machine:
        print(f"normal_form={result.normal_form}; point={result.point}")
    else:
        print(f"{result.normal_form} ; point={result.point}")
    return 0


def _run_decide(args: argparse.Namespace) -> int:
    result = handle_decide(args.sequent)
    if result.derivable:
        print("derivable=true" if args.machine else "derivable")
        return EXIT_DERIVABLE
    if args.machine:
        print(f"derivable=false; countermodel={result.countermodel}")
    else:
        print(f"not derivable; countermodel={result.countermodel}")
    return EXIT_NOT_DERIVABLE


def _run_check(args: argparse.Namespace) -> int:
    holds = handle_check(args.point, args.formula).holds
    text = "true" if holds else "false"
    print(f"holds={text}" if args.machine else text)
    return 0


def _run_frame_dot(args: argparse.Namespace) -> int:
    try:
        bases = [int(b) for b in args.bases.split(",") if b.strip() != ""]
    except ValueError:
        print("error: --bases expects comma-separated integers", file=sys.stderr)
        return EXIT_USAGE
    if any(b < 0 for b in bases):
        print("error: relation bases must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    dot = handle_frame_dot(
        args.max_coordinate, args.support, bases, args.coefficient_cap, args.full
    )
    print(dot, end="")
    return 0


_RUNNERS = {
    "normalize": _run_normalize,
    "decide": _run_decide,
    "check": _run_check,
    "frame-dot": _run_frame_dot,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass both through.
        return int(exc.code or 0)
    try:
        return _RUNNERS[args.command](args)
    except (ParseError, InvalidLSequence) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
