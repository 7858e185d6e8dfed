"""``reduce``: circle reduction of a faithful Type II_k matrix."""

from __future__ import annotations

import argparse
import logging

from symquot.commands.common import add_matrix_argument, emit, matrix_from
from symquot.invariants.moment import shell_identity
from symquot.models import ReductionReport
from symquot.pipeline.analysis import matrix_rows, type_report
from symquot.weights.reduction import orbit_map_identity, reduce_to_circle
from symquot.weights.types import detect_type, is_faithful

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("reduce", help="Reduce a faithful Type II_k matrix to its circle matrix")
    add_matrix_argument(parser)
    parser.add_argument("--search-permutations", action="store_true", help="Try column orders to find a block form")
    parser.add_argument("--check", action="store_true", help="Also run the exact moment-map and orbit-map checks")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> None:
    A = matrix_from(args.matrix)
    info = detect_type(A, search_permutations=args.search_permutations)
    B = reduce_to_circle(info)
    report = ReductionReport(
        matrix=matrix_rows(A),
        type=type_report(info),
        faithful=is_faithful(A),
        reduced=matrix_rows(B),
    )
    if args.check:
        report.shell_identity = shell_identity(info)
        report.orbit_identity = orbit_map_identity(info)
    emit(report, args)
