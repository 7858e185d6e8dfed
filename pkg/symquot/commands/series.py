"""``series``: truncated Hilbert series, optionally compared with a rational form or another matrix."""

from __future__ import annotations

import argparse
import logging

from symquot.commands.common import add_degree_bound_argument, add_matrix_argument, add_onshell_argument, emit, matrix_from
from symquot.config import get_settings
from symquot.errors import ArgumentError
from symquot.invariants.relations import Shell
from symquot.models import SeriesReport
from symquot.pipeline.analysis import matrix_rows
from symquot.series.counting import expand_rational, format_rational, offshell_dims, onshell_dims, series_equal

logger = logging.getLogger(__name__)


def parse_rational(text: str) -> tuple[list[int], list[int]]:
    """``"1,0,2:3,3,2,2"`` is numerator coefficients, then the exponents d of the (1 - t^d) factors."""
    try:
        num, den = text.split(":")
        return [int(c) for c in num.split(",")], [int(d) for d in den.split(",") if d]
    except ValueError as exc:
        raise ArgumentError(f"Rational form {text!r} must look like '1,0,2:3,3,2,2'") from exc


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("series", help="Graded dimensions of the invariant ring or the quotient")
    add_matrix_argument(parser)
    add_degree_bound_argument(parser)
    add_onshell_argument(parser)
    parser.add_argument("--rational", default=None, help="Compare with numerator:denominator-exponents, e.g. 1,0,2:3,2")
    parser.add_argument("--compare", default=None, help="Second matrix whose series is compared")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> None:
    A = matrix_from(args.matrix)
    N = args.degree_bound if args.degree_bound is not None else get_settings().degree_bound
    dims = onshell_dims if args.onshell else offshell_dims
    series = dims(A, N)
    report = SeriesReport(
        matrix=matrix_rows(A),
        order=N,
        shell=(Shell.ON if args.onshell else Shell.OFF).value,
        coefficients=list(series.coefficients),
    )
    if args.rational:
        num, den = parse_rational(args.rational)
        report.rational = format_rational(num, den)
        report.matches_rational = series_equal(series, expand_rational(num, den, N))
    if args.compare:
        B = matrix_from(args.compare)
        report.compared_with = matrix_rows(B)
        report.equal = series_equal(series, dims(B, N))
    emit(report, args, [{"degree": d, "dimension": c} for d, c in enumerate(series.coefficients)])
