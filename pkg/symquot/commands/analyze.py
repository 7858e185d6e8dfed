"""``analyze``: every computation for one weight matrix in a single report."""

from __future__ import annotations

import argparse
import logging

from symquot.commands.common import (
    add_degree_bound_argument,
    add_force_argument,
    add_matrix_argument,
    add_onshell_argument,
    emit,
    matrix_from,
)
from symquot.pipeline.analysis import run_analysis

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("analyze", help="Type, reduction, generators, relations and series of a matrix")
    add_matrix_argument(parser)
    add_degree_bound_argument(parser)
    add_onshell_argument(parser)
    add_force_argument(parser)
    parser.add_argument("--brackets", action="store_true", help="Include the Poisson bracket table")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> None:
    A = matrix_from(args.matrix)
    report = run_analysis(A, args.degree_bound, args.onshell, args.brackets, args.force)
    emit(report, args, [row.model_dump() for row in report.generators])
