"""Command-line entry point: ``mcdm rank|compare|ahp|anp|waspas-sweep``."""

from __future__ import annotations

import argparse
import logging
import os
import sys
import warnings

from . import reports
from .errors import (
    InconsistentJudgments,
    MCDMError,
    NoConvergence,
    ParseError,
    UnknownMethod,
    ValidationError,
)
from .loaders import load_problem
from .simple import DEFAULT_LAMBDA

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_NO_CONVERGENCE = 5
EXIT_INCONSISTENT = 6

FORMATS = ("table", "json", "csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcdm", description="Aggregation-type multi-criteria decision-making methods.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="problem file (.csv/.json) or bundled fixture name, e.g. table8_1")
        p.add_argument("--input-format", choices=("auto", "csv", "json"), default="auto")
        p.add_argument("--format", choices=FORMATS, default=None,
                       help="output format (default: $MCDM_FORMAT or table)")
        p.add_argument("--renormalize", action="store_true",
                       help="rescale criterion weights to sum to 1 instead of rejecting them")
        return p

    p = add("rank", "rank alternatives with one method")
    p.add_argument("--method", required=True, help=", ".join(reports.ACM_METHODS))
    p.add_argument("--lambda", dest="lam", type=float, default=DEFAULT_LAMBDA,
                   help="WASPAS blend parameter")

    p = add("compare", "rank with several methods side by side")
    p.add_argument("--method", action="append", dest="methods",
                   help="method to include; repeat or comma-separate (default: all six)")
    p.add_argument("--lambda", dest="lam", type=float, default=DEFAULT_LAMBDA)

    p = add("ahp", "analytic hierarchy process")
    p.add_argument("--strict", action="store_true", help="fail when a consistency ratio exceeds 0.1")
    p.add_argument("--weights-only", action="store_true", help="stop after the criteria weights")
    p.add_argument("--hybrid", metavar="METHOD",
                   help="rank the raw values with METHOD using the AHP criteria weights")
    p.add_argument("--lambda", dest="lam", type=float, default=DEFAULT_LAMBDA)

    p = add("anp", "analytic network process")
    p.add_argument("--strict", action="store_true")

    p = add("waspas-sweep", "WASPAS scores over a grid of lambda values")
    p.add_argument("--grid", default="0:1:0.1", help="START:STOP:STEP (default 0:1:0.1)")
    return parser


def _methods(raw):
    if not raw:
        return None
    return [m.strip() for item in raw for m in item.split(",") if m.strip()]


def run(args) -> dict:
    pf = load_problem(args.file, args.input_format, args.renormalize)
    if args.command == "rank":
        return reports.cmd_rank(pf, args.method, args.lam)
    if args.command == "compare":
        return reports.cmd_compare(pf, _methods(args.methods), args.lam)
    if args.command == "ahp":
        return reports.cmd_ahp(pf, args.strict, args.weights_only, args.hybrid, args.lam)
    if args.command == "anp":
        return reports.cmd_anp(pf, args.strict)
    return reports.cmd_waspas_sweep(pf, args.grid)


def exit_code(exc: BaseException) -> int:
    for kind, code in ((ParseError, EXIT_PARSE), (UnknownMethod, EXIT_USAGE),
                       (InconsistentJudgments, EXIT_INCONSISTENT),
                       (NoConvergence, EXIT_NO_CONVERGENCE), (ValidationError, EXIT_VALIDATION)):
        if isinstance(exc, kind):
            return code
    return EXIT_ERROR


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    fmt = args.format or os.environ.get("MCDM_FORMAT", "table")
    if fmt not in FORMATS:
        print(f"mcdm: MCDM_FORMAT must be one of {', '.join(FORMATS)}", file=sys.stderr)
        return EXIT_USAGE
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            warnings.showwarning = _show_warning
            report = run(args)
    except MCDMError as exc:
        print(f"mcdm: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exit_code(exc)
    text = reports.render(report, fmt)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return EXIT_OK


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"mcdm: warning: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
