"""
Command-line front end for the bracket tables, single brackets, m4 values and
the verification suites.

Usage (from project root with venv activated):
    python -m decabracket.scripts.cli tables --format json --out tables.json
    python -m decabracket.scripts.cli bracket --f "x2^3" --a "x0^2" --b "x1^2"
    python -m decabracket.scripts.cli m4 --ordering efgh --alpha=-2,-2,-1 --a 2,0,0 --b 0,2,0 --c 0,0,3
    python -m decabracket.scripts.cli verify --suite tables --jobs 4
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from decabracket import __version__
from decabracket.brackets.fobracket import bracket_table, monomial_tables
from decabracket.brackets.serialization import TABLE_FORMATS, render_tables
from decabracket.config import CUBIC_DEGREE, DEFAULT_JOBS, DEFAULT_SUITE, LOG_FORMAT, SECTION_DEGREE
from decabracket.homotopy.ainf import M4Ordering, OutOfScopeError, m4_agreement
from decabracket.homotopy.cech import CohomologyClass
from decabracket.polynomials.multidegree import MultiIndex, delta_set
from decabracket.polynomials.polynomial import (
    Polynomial,
    format_rational,
    monomial,
    parse_multi_index,
    parse_polynomial,
    poly_sum,
    render,
    to_rational,
    x_ring,
)
from decabracket.verification.suites import SUITE_NAMES, run_suite

logger = logging.getLogger(__name__)


def parse_cubic(text: str) -> Polynomial:
    """
    Read F either as a polynomial string or as 10 comma-separated coefficients
    in the order of Delta(3) (x0^3, x0^2*x1, ..., x2^3).
    """
    ring = x_ring()
    parts = [part.strip() for part in text.split(",")]
    if len(parts) > 1:
        if len(parts) != len(delta_set(CUBIC_DEGREE)):
            raise ValueError(f"--f: expected {len(delta_set(CUBIC_DEGREE))} coefficients, got {len(parts)}")
        try:
            coefficients = [to_rational(part) for part in parts]
        except ValueError as e:
            raise ValueError(f"--f: {e}") from e
        return poly_sum(ring, (monomial(ring, c, coeff) for c, coeff in zip(delta_set(CUBIC_DEGREE), coefficients)))
    try:
        return parse_polynomial(text, ring)
    except ValueError as e:
        raise ValueError(f"--f: {e}") from e


def parse_exponent(text: str, flag: str) -> MultiIndex:
    try:
        return parse_multi_index(text)
    except ValueError as e:
        raise ValueError(f"{flag}: {e}") from e


def parse_section(text: str, flag: str) -> MultiIndex:
    exponent = parse_exponent(text, flag)
    if not exponent.is_nonnegative() or exponent.total != SECTION_DEGREE:
        raise ValueError(f"{flag}: x^{exponent} is not a monomial of degree {SECTION_DEGREE}")
    return exponent


def format_class(h: CohomologyClass) -> str:
    if h.is_zero():
        return "0"
    return " + ".join(
        f"{format_rational(h.coefficient(exponent))} · x^{exponent}" for exponent in sorted(h.terms, reverse=True)
    )


def write_output(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    print(f"Wrote: {out}")


def cmd_tables(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    tables = monomial_tables()
    logger.info(f"[TABLES] rendering {len(tables)} tables as {args.format}")
    write_output(render_tables(tables, args.format), args.out)
    return 0


def cmd_bracket(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        cubic = parse_cubic(args.f)
        a = parse_section(args.a, "--a")
        b = parse_section(args.b, "--b")
        table = bracket_table(cubic)
    except ValueError as e:
        parser.error(str(e))
    print(render(table.entry(a, b)))
    return 0


def cmd_m4(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        ordering = M4Ordering.parse(args.ordering)
        alpha = parse_exponent(args.alpha, "--alpha")
        if not alpha.is_negative():
            raise ValueError(f"--alpha: x^{alpha} is not an H^2 basis monomial (all exponents must be negative)")
        polynomial_args = []
        for flag, value in (("--a", args.a), ("--b", args.b), ("--c", args.c)):
            exponent = parse_exponent(value, flag)
            if not exponent.is_nonnegative():
                raise ValueError(f"{flag}: x^{exponent} has a negative exponent")
            polynomial_args.append(exponent)
        closed, tree, agree = m4_agreement(ordering, alpha, *polynomial_args)
    except OutOfScopeError as e:
        parser.error(f"out of scope: {e}")
    except ValueError as e:
        parser.error(str(e))
    print(f"closed form: {format_class(closed)}")
    print(f"tree sum:    {format_class(tree)}")
    print(f"agreement:   {str(agree).lower()}")
    return 0 if agree else 1


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.jobs < 1:
        parser.error(f"--jobs must be at least 1, got {args.jobs}")
    report = run_suite(args.suite, args.jobs)
    sys.stdout.write(report.render_text())
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(report.to_json(), encoding="utf-8")
        print(f"Wrote: {args.out}")
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="decabracket",
        description="Exact Poisson bracket tables on P^5 from the four-ary product on P^2.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Verbose logging")
    subparsers = parser.add_subparsers(dest="command", required=True)

    tables = subparsers.add_parser("tables", help="Emit the ten monomial bracket tables")
    tables.add_argument("--format", choices=TABLE_FORMATS, default="json", help="Output format (default: json)")
    tables.add_argument("--out", type=Path, default=None, help="Output file (default: stdout)")
    tables.set_defaults(handler=cmd_tables, command_parser=tables)

    bracket = subparsers.add_parser("bracket", help="Compute {x^a, x^b}_F for one cubic F")
    bracket.add_argument(
        "--f",
        required=True,
        help="Cubic F as 'x0^3 + x1^3 + x2^3' or 10 comma-separated coefficients in Delta(3) order",
    )
    bracket.add_argument("--a", required=True, help="Degree-2 monomial, e.g. 'x0^2' or '2,0,0'")
    bracket.add_argument("--b", required=True, help="Degree-2 monomial, e.g. 'x1^2' or '0,2,0'")
    bracket.set_defaults(handler=cmd_bracket, command_parser=bracket)

    m4 = subparsers.add_parser("m4", help="Evaluate m4 with one H^2 argument by both routes")
    m4.add_argument("--ordering", required=True, help=f"Position of e: one of {[o.value for o in M4Ordering]}")
    m4.add_argument("--alpha", required=True, help="All-negative exponent of e, e.g. --alpha=-2,-2,-1")
    m4.add_argument("--a", required=True, help="Exponent of the first polynomial argument")
    m4.add_argument("--b", required=True, help="Exponent of the second polynomial argument")
    m4.add_argument("--c", required=True, help="Exponent of the third polynomial argument")
    m4.set_defaults(handler=cmd_m4, command_parser=m4)

    verify = subparsers.add_parser("verify", help="Run the verification suites")
    verify.add_argument("--suite", choices=SUITE_NAMES, default=DEFAULT_SUITE, help="Suite to run (default: all)")
    verify.add_argument("--jobs", type=int, default=DEFAULT_JOBS, help="Maximum worker processes (default: 1)")
    verify.add_argument("--out", type=Path, default=None, help="Also write the report as JSON to this file")
    verify.set_defaults(handler=cmd_verify, command_parser=verify)
    return parser


def main(argv: Optional[List[str]] = None) -> None:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format=LOG_FORMAT)
    raise SystemExit(args.handler(args, args.command_parser))


if __name__ == "__main__":
    main()
