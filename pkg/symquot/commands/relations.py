"""``relations``: the presentation ideal of the invariant ring or the quotient."""

from __future__ import annotations

import argparse
import logging

from symquot.commands.common import add_force_argument, add_matrix_argument, add_onshell_argument, emit, matrix_from
from symquot.invariants.generators import type1_generators
from symquot.invariants.relations import Shell, type1_relations
from symquot.pipeline.analysis import relations_report
from symquot.utils.cache import get_presentation
from symquot.weights.types import detect_type

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("relations", help="Relations among the invariant generators")
    add_matrix_argument(parser)
    add_onshell_argument(parser)
    add_force_argument(parser)
    parser.add_argument("--prefix", default="p", help="Generator name prefix")
    parser.add_argument("--closed-form", action="store_true", help="Use the Type I_k binomial families")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> None:
    A = matrix_from(args.matrix)
    if args.closed_form:
        info = detect_type(A)
        presentation = type1_relations(info, type1_generators(info, args.force))
        if args.onshell:
            presentation = presentation.on_shell()
    else:
        presentation = get_presentation(A, args.prefix, Shell.ON if args.onshell else Shell.OFF, args.force)
    report = relations_report(presentation)
    emit(report, args, [{"relation": r} for r in report.relations])
