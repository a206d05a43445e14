# app/cli.py
"""
Command-line front end.

    table FAMILY --n N --format {json,csv,latex}
    verify ID|all --n N --mode {symbolic,sampled} --format {json,csv,latex}
    expand POLY --basis {bernoulli,euler} --format {json,csv,latex}
    eval FAMILY N --q Q --x X

stdout carries the document, stderr carries diagnostics. Exit codes: 0 all
pass, 1 verification failure, 2 usage or parse error, 3 evaluation pole.
"""
import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import List, Optional

from app import formats
from app.cfactorial import factor_label, q_factor
from app.exactnum import PoleError, qrat_eval
from app.families import (
    Family,
    build_table,
    expand_in_bernoulli_basis,
    expand_in_euler_basis,
    poly_of,
)
from app.identities import UnknownIdentityError, run_all, run_check
from app.polyx import xpoly_eval
from app.utils import configure_logging, resolve_log_level

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_POLE = 3

FORMATS = ("json", "csv", "latex")
BASES = {
    "bernoulli": expand_in_bernoulli_basis,
    "euler": expand_in_euler_basis,
}


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umbralens",
        description="Degenerate Bernoulli, Euler and Genocchi polynomials over Q(q)",
    )
    parser.add_argument("--debug", action="store_true", help="log at DEBUG level to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    families = [f.value for f in Family]

    table = sub.add_parser("table", help="emit a family table")
    table.add_argument("family", choices=families)
    table.add_argument("--n", type=_nonnegative, default=4, dest="n_max")
    table.add_argument("--format", choices=FORMATS, default="json")

    verify = sub.add_parser("verify", help="run identity checks")
    verify.add_argument("identity", help="a registered identity id, or 'all'")
    verify.add_argument("--n", type=_nonnegative, default=8, dest="n_max")
    verify.add_argument("--mode", choices=("symbolic", "sampled"), default="symbolic")
    verify.add_argument("--format", choices=FORMATS, default="json")
    verify.add_argument("--workers", type=int, default=1, help="threads for 'verify all'")
    verify.add_argument("--timing", action="store_true", help="include wall times as metadata")

    expand = sub.add_parser("expand", help="expand a polynomial in a family basis")
    expand.add_argument("polynomial")
    expand.add_argument("--basis", choices=sorted(BASES), default="bernoulli")
    expand.add_argument("--format", choices=FORMATS, default="json")

    evaluate = sub.add_parser("eval", help="evaluate a family polynomial at (q, x)")
    evaluate.add_argument("family", choices=families)
    evaluate.add_argument("n", type=_nonnegative)
    evaluate.add_argument("--q", type=_rational, required=True, dest="q0")
    evaluate.add_argument("--x", type=_rational, default=Fraction(0), dest="x0")

    return parser


def cmd_table(args) -> int:
    table = build_table(Family(args.family), args.n_max)
    writer = {
        "json": formats.table_to_json,
        "csv": formats.table_to_csv,
        "latex": formats.table_to_latex,
    }[args.format]
    _emit(writer(table))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        if args.identity == "all":
            reports = run_all(args.n_max, args.mode, workers=max(1, args.workers))
        else:
            reports = [run_check(args.identity, args.n_max, args.mode)]
    except UnknownIdentityError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.format == "json":
        _emit(formats.reports_to_json(reports, with_timing=args.timing))
    elif args.format == "csv":
        _emit(formats.reports_to_csv(reports))
    else:
        _emit(formats.reports_to_latex(reports))

    failed = [r.id for r in reports if not r.passed]
    for report in reports:
        for note in report.notes:
            logger.info("%s: %s", report.id, note)
    if failed:
        print(f"verification failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_expand(args) -> int:
    try:
        p = formats.parse_polynomial(args.polynomial)
    except formats.LiteralParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    coeffs = BASES[args.basis](p)
    if args.format == "json":
        doc = {
            "basis": args.basis,
            "input": args.polynomial,
            "coefficients": [formats.scalar_to_json(c) for c in coeffs],
        }
        _emit(json.dumps(doc, indent=2))
    elif args.format == "csv":
        _emit("".join(f"{k},{text}\n" for k, text in enumerate(formats.coefficients_to_text(coeffs))))
    else:
        symbol = "\\beta" if args.basis == "bernoulli" else "E"
        terms = [
            f"d_{{{k}}} &= {formats.scalar_to_latex(c)} \\quad ({symbol}_{{{k}}})"
            for k, c in enumerate(coeffs)
        ]
        _emit("\\begin{align*}\n" + " \\\\\n".join(terms) + "\n\\end{align*}\n")
    return EXIT_OK


def vanishing_factor(q0: Fraction, n: int) -> Optional[str]:
    """Label of the first factor jq-(j-1), j <= n, that vanishes at q0"""
    for j in range(1, n + 1):
        if q_factor(j)(q0) == 0:
            return factor_label(j)
    return None


def cmd_eval(args) -> int:
    family = Family(args.family)
    p = poly_of(family, args.n)
    try:
        value = qrat_eval(xpoly_eval(p, args.x0), args.q0)
    except PoleError:
        factor = vanishing_factor(args.q0, args.n)
        print(f"error: {PoleError(args.q0, factor)}", file=sys.stderr)
        return EXIT_POLE
    _emit(f"{value}\n")
    return EXIT_OK


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "expand": cmd_expand,
    "eval": cmd_eval,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help and 2 for usage errors
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    configure_logging(resolve_log_level(args.debug))
    logger.debug("dispatching %s with %s", args.command, vars(args))
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
