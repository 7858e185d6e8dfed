"""``classify``: classification key of one matrix, or a comparison of two."""

from __future__ import annotations

import argparse
import logging

from symquot.commands.common import add_matrix_argument, emit, matrix_from
from symquot.models import ClassificationReport, ComparisonReport
from symquot.weights.classify import ClassKey, classify, same_class

logger = logging.getLogger(__name__)


def key_report(key: ClassKey) -> ClassificationReport:
    return ClassificationReport(kind=key.kind.value, key=list(key.key), determined=key.determined, note=key.note)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("classify", help="Classification key, or whether two quotients are equivalent")
    add_matrix_argument(parser)
    parser.add_argument("other", nargs="?", default=None, help="Second matrix to compare with")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> None:
    A = matrix_from(args.matrix)
    if args.other is None:
        emit(key_report(classify(A)), args)
        return
    comparison = same_class(A, matrix_from(args.other))
    left, right = comparison.keys
    emit(
        ComparisonReport(
            verdict=comparison.verdict.value,
            reason=comparison.reason,
            left=key_report(left),
            right=key_report(right),
        ),
        args,
    )
